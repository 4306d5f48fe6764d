use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{CharError, LaurentPoly};

/// A virtual representation of the circle, recorded as its multiplicity
/// function on the weight lattice `Z`. Only nonzero multiplicities are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualCharacter {
    multiplicities: BTreeMap<i64, i64>,
}

impl VirtualCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a character from `(weight, multiplicity)` pairs. Repeated
    /// weights are summed and zero entries dropped.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (beta, m) in pairs {
            out.add_at(beta, m);
        }
        out
    }

    fn add_at(&mut self, beta: i64, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.multiplicities.entry(beta).or_insert(0);
        *e += m;
        if *e == 0 {
            self.multiplicities.remove(&beta);
        }
    }

    pub fn multiplicity(&self, beta: i64) -> i64 {
        self.multiplicities.get(&beta).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Nonzero entries in increasing weight order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.multiplicities.iter().map(|(b, m)| (*b, *m))
    }

    pub fn support_min(&self) -> Option<i64> {
        self.multiplicities.keys().next().copied()
    }

    pub fn support_max(&self) -> Option<i64> {
        self.multiplicities.keys().next_back().copied()
    }

    /// Virtual dimension (value of the character at the identity).
    pub fn dimension(&self) -> i64 {
        self.multiplicities.values().sum()
    }

    /// Places the multiplicity of `β` at `q^{2β}`.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.iter().map(|(b, m)| (2 * b, m)))
    }
}

/// Direct sum of virtual representations.
pub fn char_sum(a: &VirtualCharacter, b: &VirtualCharacter) -> VirtualCharacter {
    let mut out = a.clone();
    for (beta, m) in b.iter() {
        out.add_at(beta, m);
    }
    out
}

impl Add<&VirtualCharacter> for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(self, rhs: &VirtualCharacter) -> VirtualCharacter {
        char_sum(self, rhs)
    }
}

/// Reads a Laurent polynomial in `q` as a character in `λ = q^2`.
pub fn to_character(p: &LaurentPoly) -> Result<VirtualCharacter, CharError> {
    let mut out = VirtualCharacter::zero();
    for (e, c) in p.terms() {
        if e.is_odd() {
            return Err(CharError::OddExponent { exponent: e });
        }
        let m = c.to_i64().ok_or(CharError::Overflow { exponent: e })?;
        out.add_at(e / 2, m);
    }
    Ok(out)
}

impl fmt::Display for VirtualCharacter {
    /// One `β: multiplicity` line per weight, or `(zero representation)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(zero representation)");
        }
        for (i, (b, m)) in self.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{b}: {m}")?;
        }
        Ok(())
    }
}
