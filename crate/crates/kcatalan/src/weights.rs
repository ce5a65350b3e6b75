//! Weight vectors: an integer weight for every height index h >= 0,
//! stored as a finite prefix plus a tail rule.
//!
//! Text form (the weight DSL):
//!
//! ```text
//! ones | odd-squares | geom:<int>
//!     | list:<int>(,<int>)*[;tail:(zero|const=<int>|odd-squares|geom=<int>)]
//! ```
//!
//! The tail defaults to `zero` when omitted. Tail rules evaluate at the
//! absolute index h, not at the offset past the prefix: `odd-squares`
//! gives `(2h+1)^2` and `geom=q` gives `q^h` regardless of prefix length.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tail {
    Zero,
    Constant(BigInt),
    OddSquares,
    Geometric(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    prefix: Vec<BigInt>,
    tail: Tail,
}

impl WeightVector {
    pub fn new(prefix: Vec<BigInt>, tail: Tail) -> Self {
        let mut wv = Self { prefix, tail };
        wv.canonicalize();
        wv
    }

    /// All-ones weights; the unweighted case.
    pub fn ones() -> Self {
        Self { prefix: Vec::new(), tail: Tail::Constant(BigInt::one()) }
    }

    /// `b_h = (2h+1)^2`, the vector `(1, 9, 25, 49, ..)`.
    pub fn odd_squares() -> Self {
        Self { prefix: Vec::new(), tail: Tail::OddSquares }
    }

    /// `b_h = q^h`.
    pub fn geometric(q: BigInt) -> Self {
        Self { prefix: Vec::new(), tail: Tail::Geometric(q) }
    }

    /// Finite list of weights with a zero tail.
    pub fn from_prefix(prefix: Vec<BigInt>) -> Self {
        Self::new(prefix, Tail::Zero)
    }

    /// Drops prefix entries that the tail rule already produces, so that
    /// equal spellings parse to structurally equal values.
    fn canonicalize(&mut self) {
        while let Some(last) = self.prefix.last() {
            if *last == self.tail_value_at(self.prefix.len() - 1) {
                self.prefix.pop();
            } else {
                break;
            }
        }
    }

    fn tail_value_at(&self, h: usize) -> BigInt {
        match &self.tail {
            Tail::Zero => BigInt::zero(),
            Tail::Constant(c) => c.clone(),
            Tail::OddSquares => {
                let odd = BigInt::from(2 * h as u64 + 1);
                &odd * &odd
            }
            Tail::Geometric(q) => q.pow(h as u32),
        }
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Weight at height index h.
    pub fn weight_at(&self, h: usize) -> BigInt {
        match self.prefix.get(h) {
            Some(v) => v.clone(),
            None => self.tail_value_at(h),
        }
    }

    /// Agrees with `self` below index t and is zero from t on.
    pub fn zero_from(&self, t: usize) -> WeightVector {
        WeightVector::new((0..t).map(|h| self.weight_at(h)).collect(), Tail::Zero)
    }

    /// Same vector with every entry reduced to its least nonnegative
    /// residue; only meaningful for zero-tail vectors, which is what the
    /// periodicity reductions produce.
    pub fn reduce_mod(&self, m: u64) -> WeightVector {
        let m = BigInt::from(m);
        let reduced = self
            .prefix
            .iter()
            .map(|v| num_integer::Integer::mod_floor(v, &m))
            .collect();
        WeightVector::new(reduced, self.tail.clone())
    }
}

/// Parses the weight DSL; see the module docs for the grammar.
pub fn parse_weight_spec(text: &str) -> Result<WeightVector> {
    text.parse()
}

fn parse_int(text: &str, offset: usize) -> Result<BigInt> {
    BigInt::from_str(text.trim()).map_err(|_| Error::WeightSpec {
        position: offset,
        message: format!("expected an integer, found {text:?}"),
    })
}

impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ones" => return Ok(WeightVector::ones()),
            "odd-squares" => return Ok(WeightVector::odd_squares()),
            _ => {}
        }
        if let Some(q) = s.strip_prefix("geom:") {
            return Ok(WeightVector::geometric(parse_int(q, 5)?));
        }
        if let Some(rest) = s.strip_prefix("list:") {
            let (list_part, tail_part) = match rest.find(';') {
                Some(i) => (&rest[..i], Some((&rest[i + 1..], 5 + i + 1))),
                None => (rest, None),
            };
            if list_part.is_empty() {
                return Err(Error::WeightSpec {
                    position: 5,
                    message: "empty weight list".to_string(),
                });
            }
            let mut prefix = Vec::new();
            let mut offset = 5;
            for item in list_part.split(',') {
                prefix.push(parse_int(item, offset)?);
                offset += item.len() + 1;
            }
            let tail = match tail_part {
                None => Tail::Zero,
                Some((t, pos)) => {
                    let t = t.strip_prefix("tail:").ok_or_else(|| Error::WeightSpec {
                        position: pos,
                        message: "expected tail:<rule>".to_string(),
                    })?;
                    let pos = pos + 5;
                    match t {
                        "zero" => Tail::Zero,
                        "odd-squares" => Tail::OddSquares,
                        _ => {
                            if let Some(c) = t.strip_prefix("const=") {
                                Tail::Constant(parse_int(c, pos + 6)?)
                            } else if let Some(q) = t.strip_prefix("geom=") {
                                Tail::Geometric(parse_int(q, pos + 5)?)
                            } else {
                                return Err(Error::WeightSpec {
                                    position: pos,
                                    message: format!("unknown tail rule {t:?}"),
                                });
                            }
                        }
                    }
                }
            };
            return Ok(WeightVector::new(prefix, tail));
        }
        Err(Error::WeightSpec {
            position: 0,
            message: format!("unknown weight spec {s:?}"),
        })
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefix.is_empty() {
            match &self.tail {
                Tail::Constant(c) if c.is_one() => return write!(f, "ones"),
                Tail::OddSquares => return write!(f, "odd-squares"),
                Tail::Geometric(q) => return write!(f, "geom:{q}"),
                // No literal for the empty list; `list:0` re-parses to the
                // same canonical value.
                Tail::Zero => return write!(f, "list:0"),
                Tail::Constant(_) => {}
            }
        }
        let items: Vec<String> = self.prefix.iter().map(BigInt::to_string).collect();
        // no literal for the empty list: lead with the tail's first value,
        // which canonicalization re-absorbs on parse
        let items =
            if items.is_empty() { self.tail_value_at(0).to_string() } else { items.join(",") };
        write!(f, "list:{items}")?;
        match &self.tail {
            Tail::Zero => Ok(()),
            Tail::Constant(c) => write!(f, ";tail:const={c}"),
            Tail::OddSquares => write!(f, ";tail:odd-squares"),
            Tail::Geometric(q) => write!(f, ";tail:geom={q}"),
        }
    }
}
