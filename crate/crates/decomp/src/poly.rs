use std::fmt;

/// A monomial as the sorted multiset of its variable indices.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub coef: i64,
    pub mono: Monomial,
}

/// Integer polynomial with terms in decreasing monomial order, like terms
/// combined, content removed and the first coefficient positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    terms: Vec<Term>,
}

pub fn dense_to_mono(exp: &[u32]) -> Monomial {
    let mut m = Vec::new();
    for (i, &e) in exp.iter().enumerate() {
        m.extend(std::iter::repeat_n(i as u32, e as usize));
    }
    m
}

pub fn mono_to_dense(m: &[u32], n: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    m.iter().for_each(|&v| e[v as usize] += 1);
    e
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Whether `a` divides `b`.
pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Polynomial {
    pub fn new(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.mono.cmp(&a.mono));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.mono == t.mono => last.coef += t.coef,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coef != 0);
        let content = merged.iter().fold(0, |g, t| gcd(g, t.coef));
        let sign = if merged.first().is_some_and(|t| t.coef < 0) { -1 } else { 1 };
        if content > 0 {
            merged.iter_mut().for_each(|t| t.coef = sign * t.coef / content);
        }
        Polynomial { terms: merged }
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::new([Term { coef: 1, mono }])
    }

    /// `x^plus - x^minus`.
    pub fn binomial(plus: Monomial, minus: Monomial) -> Self {
        Self::new([Term { coef: 1, mono: plus }, Term { coef: -1, mono: minus }])
    }

    pub fn from_dense(terms: &[(i64, Vec<u32>)]) -> Self {
        Self::new(terms.iter().map(|(c, e)| Term {
            coef: *c,
            mono: dense_to_mono(e),
        }))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `(a, b, s)` for `x^a + s x^b` with `s = +-1`.
    pub fn as_unit_binomial(&self) -> Option<(&Monomial, &Monomial, i8)> {
        match self.terms.as_slice() {
            [a, b] if a.coef == 1 && b.coef.abs() == 1 => Some((&a.mono, &b.mono, b.coef as i8)),
            _ => None,
        }
    }

    /// Monomials and two-term binomials with unit coefficients.
    pub fn is_pure(&self) -> bool {
        self.is_monomial() || self.as_unit_binomial().is_some()
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.mono.len()).max().unwrap_or(0)
    }

    pub fn mul_mono(&self, m: &[u32]) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: t.coef,
                    mono: mono_mul(&t.mono, m),
                })
                .collect(),
        }
    }

    pub fn rename(&self, map: impl Fn(u32) -> u32) -> Polynomial {
        Polynomial::new(self.terms.iter().map(|t| {
            let mut mono: Monomial = t.mono.iter().map(|&v| map(v)).collect();
            mono.sort_unstable();
            Term { coef: t.coef, mono }
        }))
    }

    pub fn to_dense(&self, n: usize) -> Vec<(i64, Vec<u32>)> {
        self.terms.iter().map(|t| (t.coef, mono_to_dense(&t.mono, n))).collect()
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

fn write_mono(f: &mut fmt::Formatter<'_>, m: &[u32], names: &[String]) -> fmt::Result {
    if m.is_empty() {
        return write!(f, "1");
    }
    let mut first = true;
    let mut i = 0;
    while i < m.len() {
        let mut e = 1;
        while i + e < m.len() && m[i + e] == m[i] {
            e += 1;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", names[m[i] as usize])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        i += e;
    }
    Ok(())
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, t) in self.poly.terms.iter().enumerate() {
            let c = t.coef;
            if idx > 0 {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write_mono(f, &t.mono, self.names)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn canonical_form() {
        let p = Polynomial::new([
            Term { coef: -2, mono: vec![0] },
            Term { coef: 4, mono: vec![1, 1] },
            Term { coef: 2, mono: vec![0] },
            Term { coef: 2, mono: vec![0, 0] },
        ]);
        assert_eq!(p.display(&names()).to_string(), "2*y^2 + x^2");
        assert!(Polynomial::new([Term { coef: 3, mono: vec![] }, Term { coef: -3, mono: vec![] }]).is_zero());
    }

    #[test]
    fn unit_binomials() {
        let b = Polynomial::binomial(vec![1], vec![0, 2]);
        assert_eq!(b.as_unit_binomial(), Some((&vec![1], &vec![0, 2], -1)));
        assert_eq!(b.display(&names()).to_string(), "y - x*z");
        assert!(Polynomial::new([Term { coef: 1, mono: vec![0] }, Term { coef: 2, mono: vec![1] }]).as_unit_binomial().is_none());
    }

    #[test]
    fn monomial_arithmetic() {
        assert_eq!(mono_mul(&[0, 2], &[1, 2]), vec![0, 1, 2, 2]);
        assert!(mono_divides(&[2, 2], &[0, 2, 2]));
        assert!(!mono_divides(&[2, 2], &[0, 2]));
        assert_eq!(dense_to_mono(&[2, 0, 1]), vec![0, 0, 2]);
        assert_eq!(mono_to_dense(&[0, 0, 2], 3), vec![2, 0, 1]);
    }
}
