//! Exact sparse multivariate polynomial arithmetic over the integers, in two
//! banks of variables `x1..xn` and `y1..yn`, together with divided
//! difference operators and double Schubert polynomials.
//!
//! Coefficients are arbitrary-precision integers and every operation is
//! exact. The divided difference is implemented by term pairing: each
//! monomial of the input contributes a telescoping block of monomials to
//! the quotient, so no polynomial division ever happens.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::perm::Permutation;
use crate::Error;

/// A variable of the polynomial ring: `X(i)` is `x_i`, `Y(i)` is `y_i`
/// (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// Exponent vector over `x1..xn, y1..yn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    xs: Vec<u32>,
    ys: Vec<u32>,
}

impl Mono {
    fn one(n: usize) -> Self {
        Mono { xs: vec![0; n], ys: vec![0; n] }
    }

    pub fn degree(&self) -> u32 {
        self.xs.iter().sum::<u32>() + self.ys.iter().sum::<u32>()
    }

    fn is_one(&self) -> bool {
        self.xs.iter().all(|&e| e == 0) && self.ys.iter().all(|&e| e == 0)
    }
}

// Graded lexicographic: total degree first, then lex on (x-exponents,
// y-exponents).
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.xs.cmp(&other.xs))
            .then_with(|| self.ys.cmp(&other.ys))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with `BigInt` coefficients in `x1..xn, y1..yn`.
///
/// No zero coefficients are stored, and the term map is keyed by the
/// graded-lex order on monomials, so equal polynomials have equal
/// representations.
///
/// ```
/// use schubert::poly::SparsePoly;
///
/// let p = SparsePoly::var_x(1, 2) + SparsePoly::var_y(2, 2);
/// let q = p.clone() * p.clone();
/// assert_eq!(q.render(), "x1^2 + 2*x1*y2 + y2^2");
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    n: usize,
    terms: BTreeMap<Mono, BigInt>,
}

impl SparsePoly {
    pub fn zero(n: usize) -> Self {
        SparsePoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(BigInt::one(), n)
    }

    pub fn constant(c: BigInt, n: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(n), c);
        }
        SparsePoly { n, terms }
    }

    /// The variable `x_i` (1-based) with budget `n`.
    pub fn var_x(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut m = Mono::one(n);
        m.xs[i - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        SparsePoly { n, terms }
    }

    /// The variable `y_i` (1-based) with budget `n`.
    pub fn var_y(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut m = Mono::one(n);
        m.ys[i - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        SparsePoly { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    fn insert(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Extends the variable budget to `n`, keeping every term.
    pub fn pad_to(&self, n: usize) -> SparsePoly {
        assert!(n >= self.n, "cannot shrink the variable budget");
        let mut out = SparsePoly::zero(n);
        for (m, c) in &self.terms {
            let mut xs = m.xs.clone();
            let mut ys = m.ys.clone();
            xs.resize(n, 0);
            ys.resize(n, 0);
            out.insert(Mono { xs, ys }, c.clone());
        }
        out
    }

    /// Action of `s_i` on the `x` variables: swaps the exponents of `x_i`
    /// and `x_{i+1}` in every term.
    pub fn swap_x(&self, i: usize) -> SparsePoly {
        assert!(i >= 1 && i < self.n);
        let mut out = SparsePoly::zero(self.n);
        for (m, c) in &self.terms {
            let mut xs = m.xs.clone();
            xs.swap(i - 1, i);
            out.insert(Mono { xs, ys: m.ys.clone() }, c.clone());
        }
        out
    }

    /// The divided difference `(P - s_i P) / (x_i - x_{i+1})`, acting only
    /// on the `x` variables. The division is exact by construction: each
    /// term contributes the telescoping sum
    /// `(u^a v^b - u^b v^a)/(u - v) = sum_t u^t v^{a+b-1-t}`.
    pub fn divided_difference(&self, i: usize) -> SparsePoly {
        assert!(i >= 1 && i < self.n, "divided difference index out of range");
        let mut out = SparsePoly::zero(self.n);
        for (m, c) in &self.terms {
            let a = m.xs[i - 1];
            let b = m.xs[i];
            if a == b {
                continue;
            }
            let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
            for t in lo..hi {
                let mut xs = m.xs.clone();
                xs[i - 1] = t;
                xs[i] = hi + lo - 1 - t;
                let coeff = if sign > 0 { c.clone() } else { -c.clone() };
                out.insert(Mono { xs, ys: m.ys.clone() }, coeff);
            }
        }
        out
    }

    /// Substitutes `x_i -> -y_i` into a polynomial that uses only `x`
    /// variables.
    pub fn x_to_minus_y(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.n);
        for (m, c) in &self.terms {
            assert!(m.ys.iter().all(|&e| e == 0), "input must be a polynomial in x only");
            let deg: u32 = m.xs.iter().sum();
            let coeff = if deg % 2 == 0 { c.clone() } else { -c.clone() };
            out.insert(Mono { xs: vec![0; self.n], ys: m.xs.clone() }, coeff);
        }
        out
    }

    /// Substitutes `x_i -> -x_i`.
    pub fn negate_x(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.n);
        for (m, c) in &self.terms {
            let deg: u32 = m.xs.iter().sum();
            let coeff = if deg % 2 == 0 { c.clone() } else { -c.clone() };
            out.insert(m.clone(), coeff);
        }
        out
    }

    /// Substitutes `y_j -> 0`, keeping only the terms free of `y`.
    pub fn set_y_zero(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.n);
        for (m, c) in &self.terms {
            if m.ys.iter().all(|&e| e == 0) {
                out.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Exact rational evaluation. The assignment must cover every variable
    /// that occurs in the polynomial.
    pub fn substitute(&self, assignment: &BTreeMap<Var, BigRational>) -> Result<BigRational, Error> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = BigRational::from(c.clone());
            for (i, &e) in m.xs.iter().enumerate() {
                if e > 0 {
                    let v = assignment
                        .get(&Var::X(i + 1))
                        .ok_or_else(|| Error::MissingVariable(format!("x{}", i + 1)))?;
                    value *= pow_rational(v, e);
                }
            }
            for (j, &e) in m.ys.iter().enumerate() {
                if e > 0 {
                    let v = assignment
                        .get(&Var::Y(j + 1))
                        .ok_or_else(|| Error::MissingVariable(format!("y{}", j + 1)))?;
                    value *= pow_rational(v, e);
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Evaluation at `x_i = a` and `y_j = b` for all `i, j`.
    pub fn eval_uniform(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let mut assignment = BTreeMap::new();
        for i in 1..=self.n {
            assignment.insert(Var::X(i), a.clone());
            assignment.insert(Var::Y(i), b.clone());
        }
        self.substitute(&assignment).expect("uniform assignment covers all variables")
    }

    /// Canonical text rendering, terms in descending graded-lex order, e.g.
    /// `x1^2*x2 - x1*y1*y2 + 3`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.xs.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", i + 1));
                } else if e > 1 {
                    factors.push(format!("x{}^{}", i + 1, e));
                }
            }
            for (j, &e) in m.ys.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("y{}", j + 1));
                } else if e > 1 {
                    factors.push(format!("y{}^{}", j + 1, e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the same grammar that [`render`](Self::render) produces.
    pub fn parse(input: &str, n: usize) -> Result<SparsePoly, Error> {
        let mut out = SparsePoly::zero(n);
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::ParsePolynomial("empty input".into()));
        }
        // split into signed terms at top level
        let bytes: Vec<char> = s.chars().collect();
        let mut pos = 0usize;
        let mut sign = BigInt::one();
        // optional leading sign
        if bytes[pos] == '-' {
            sign = -sign;
            pos += 1;
        } else if bytes[pos] == '+' {
            pos += 1;
        }
        let mut term = String::new();
        let flush = |term: &mut String, sign: &BigInt, out: &mut SparsePoly| -> Result<(), Error> {
            let (m, c) = parse_term(term.trim(), n)?;
            out.insert(m, c * sign);
            term.clear();
            Ok(())
        };
        while pos < bytes.len() {
            let ch = bytes[pos];
            if ch == '+' || ch == '-' {
                flush(&mut term, &sign, &mut out)?;
                sign = if ch == '-' { -BigInt::one() } else { BigInt::one() };
                pos += 1;
            } else {
                term.push(ch);
                pos += 1;
            }
        }
        flush(&mut term, &sign, &mut out)?;
        Ok(out)
    }
}

fn pow_rational(v: &BigRational, e: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= v;
    }
    out
}

fn parse_term(term: &str, n: usize) -> Result<(Mono, BigInt), Error> {
    if term.is_empty() {
        return Err(Error::ParsePolynomial("empty term".into()));
    }
    let mut mono = Mono::one(n);
    let mut coeff = BigInt::one();
    for factor in term.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            return Err(Error::ParsePolynomial(format!("empty factor in {term:?}")));
        }
        if f.chars().next().unwrap().is_ascii_digit() {
            let c: BigInt = f
                .parse()
                .map_err(|_| Error::ParsePolynomial(format!("bad coefficient {f:?}")))?;
            coeff *= c;
            continue;
        }
        let (bank, rest) = f.split_at(1);
        let (idx_str, exp) = match rest.split_once('^') {
            Some((i, e)) => {
                let e: u32 = e
                    .parse()
                    .map_err(|_| Error::ParsePolynomial(format!("bad exponent in {f:?}")))?;
                (i, e)
            }
            None => (rest, 1),
        };
        let idx: usize = idx_str
            .parse()
            .map_err(|_| Error::ParsePolynomial(format!("bad variable {f:?}")))?;
        if idx == 0 || idx > n {
            return Err(Error::ParsePolynomial(format!("variable index out of budget in {f:?}")));
        }
        match bank {
            "x" => mono.xs[idx - 1] += exp,
            "y" => mono.ys[idx - 1] += exp,
            _ => return Err(Error::ParsePolynomial(format!("unknown variable bank {bank:?}"))),
        }
    }
    Ok((mono, coeff))
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl std::ops::Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        assert_eq!(self.n, rhs.n, "mixing variable budgets requires explicit padding");
        for (m, c) in rhs.terms {
            self.insert(m, c);
        }
        self
    }
}

impl std::ops::Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(mut self, rhs: SparsePoly) -> SparsePoly {
        assert_eq!(self.n, rhs.n, "mixing variable budgets requires explicit padding");
        for (m, c) in rhs.terms {
            self.insert(m, -c);
        }
        self
    }
}

impl std::ops::Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.n);
        for (m, c) in self.terms {
            out.insert(m, -c);
        }
        out
    }
}

impl std::ops::Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        assert_eq!(self.n, rhs.n, "mixing variable budgets requires explicit padding");
        let mut out = SparsePoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let xs = ma.xs.iter().zip(&mb.xs).map(|(a, b)| a + b).collect();
                let ys = ma.ys.iter().zip(&mb.ys).map(|(a, b)| a + b).collect();
                out.insert(Mono { xs, ys }, ca * cb);
            }
        }
        out
    }
}

/// Which ascent to use when walking from `w` up to the longest element.
/// Both strategies produce the same polynomial; having two distinct reduced
/// paths available makes path independence testable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentStrategy {
    Leftmost,
    Rightmost,
}

/// `S_{w0}(x, y) = prod_{i+j <= n} (x_i - y_j)`.
pub fn top_schubert(n: usize) -> SparsePoly {
    let mut out = SparsePoly::one(n);
    for i in 1..=n {
        for j in 1..=n {
            if i + j <= n {
                out = out * (SparsePoly::var_x(i, n) - SparsePoly::var_y(j, n));
            }
        }
    }
    out
}

fn schubert_memo() -> &'static RwLock<HashMap<(usize, Vec<usize>), Arc<SparsePoly>>> {
    static MEMO: OnceLock<RwLock<HashMap<(usize, Vec<usize>), Arc<SparsePoly>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn double_schubert_with(w: &Permutation, strategy: DescentStrategy) -> Arc<SparsePoly> {
    let key = (w.n(), w.word().to_vec());
    if strategy == DescentStrategy::Leftmost {
        if let Some(hit) = schubert_memo().read().unwrap().get(&key) {
            return Arc::clone(hit);
        }
    }
    let n = w.n();
    let result = if w.length() == n * (n - 1) / 2 {
        Arc::new(top_schubert(n))
    } else {
        let ascents = w.ascents();
        let i = match strategy {
            DescentStrategy::Leftmost => ascents[0],
            DescentStrategy::Rightmost => *ascents.last().unwrap(),
        };
        let longer = w.times_transposition(i, i + 1);
        let parent = double_schubert_with(&longer, strategy);
        Arc::new(parent.divided_difference(i))
    };
    if strategy == DescentStrategy::Leftmost {
        // idempotent insert: concurrent writers compute the same polynomial
        schubert_memo().write().unwrap().entry(key).or_insert_with(|| Arc::clone(&result));
    }
    result
}

/// The double Schubert polynomial `S_w(x, y)`, computed by applying divided
/// differences along a reduced path from the longest element and memoized
/// per `(n, w)`.
///
/// ```
/// use schubert::{perm::Permutation, poly};
///
/// let w: Permutation = "321".parse().unwrap();
/// assert_eq!(
///     poly::double_schubert(&w).render(),
///     "x1^2*x2 - x1^2*y1 - x1*x2*y1 - x1*x2*y2 + x1*y1^2 + x1*y1*y2 + x2*y1*y2 - y1^2*y2",
/// );
/// ```
pub fn double_schubert(w: &Permutation) -> Arc<SparsePoly> {
    double_schubert_with(w, DescentStrategy::Leftmost)
}

/// Same polynomial computed along a different reduced path; used to witness
/// path independence.
pub fn double_schubert_alt_path(w: &Permutation) -> Arc<SparsePoly> {
    double_schubert_with(w, DescentStrategy::Rightmost)
}

/// The single Schubert polynomial `S_w(x) = S_w(x, 0)`.
pub fn single_schubert(w: &Permutation) -> SparsePoly {
    double_schubert(w).set_y_zero()
}

/// Verifies the convolution identity
/// `S_w(x, y) = sum_{u <=_W w} S_u(x) S_{u w^{-1}}(-y)` exactly.
pub fn check_identity_2(w: &Permutation) -> bool {
    let n = w.n();
    let mut rhs = SparsePoly::zero(n);
    let w_inv = w.inverse();
    for u in w.weak_order_ideal() {
        let left = single_schubert(&u);
        let right = single_schubert(&u.compose(&w_inv)).x_to_minus_y();
        rhs = rhs + left * right;
    }
    *double_schubert(w) == rhs
}

/// Verifies the maximal transition identity
/// `S_w = S_v (x_alpha - y_{w(beta)}) + sum_t S_{psi_t}` exactly.
pub fn check_transition_identity(w: &Permutation) -> bool {
    let n = w.n();
    let Ok(t) = w.maximal_transition() else {
        return false;
    };
    let linear = SparsePoly::var_x(t.alpha, n) - SparsePoly::var_y(w.apply(t.beta), n);
    let mut rhs = double_schubert(&t.v).as_ref().clone() * linear;
    for psi in &t.psis {
        rhs = rhs + double_schubert(psi).as_ref().clone();
    }
    *double_schubert(w) == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn divided_difference_basics() {
        let n = 3;
        let x1 = SparsePoly::var_x(1, n);
        assert_eq!(x1.divided_difference(1), SparsePoly::one(n));
        // symmetric in x1, x2 -> 0
        let sym = SparsePoly::var_x(1, n) * SparsePoly::var_x(2, n)
            + SparsePoly::var_x(1, n)
            + SparsePoly::var_x(2, n);
        assert!(sym.divided_difference(1).is_zero());
    }

    #[test]
    fn schubert_321_is_the_product() {
        let n = 3;
        let expected = (SparsePoly::var_x(1, n) - SparsePoly::var_y(1, n))
            * (SparsePoly::var_x(1, n) - SparsePoly::var_y(2, n))
            * (SparsePoly::var_x(2, n) - SparsePoly::var_y(1, n));
        assert_eq!(*double_schubert(&perm("321")), expected);
    }

    #[test]
    fn schubert_identity_and_simple() {
        assert_eq!(*double_schubert(&Permutation::identity(4)), SparsePoly::one(4));
        for n in 2..=4 {
            for i in 1..n {
                let mut expected = SparsePoly::zero(n);
                for k in 1..=i {
                    expected = expected + SparsePoly::var_x(k, n) - SparsePoly::var_y(k, n);
                }
                assert_eq!(*double_schubert(&Permutation::simple(i, n)), expected);
            }
        }
    }

    #[test]
    fn single_schubert_examples() {
        let n = 3;
        assert_eq!(single_schubert(&perm("213")), SparsePoly::var_x(1, 3));
        let x1 = SparsePoly::var_x(1, n);
        let x2 = SparsePoly::var_x(2, n);
        assert_eq!(single_schubert(&perm("321")), x1.clone() * x1 * x2);
    }

    #[test]
    fn substitute_examples() {
        let s = double_schubert(&perm("321"));
        assert_eq!(s.eval_uniform(&rat(1), &rat(-1)), rat(8));
        // constant term at the all-zero point
        let p = SparsePoly::parse("x1^2*x2 - x1*y1*y2 + 3", 3).unwrap();
        assert_eq!(p.eval_uniform(&rat(0), &rat(0)), rat(3));
        // missing variable is reported
        let mut partial = BTreeMap::new();
        partial.insert(Var::X(1), rat(1));
        assert!(s.substitute(&partial).is_err());
    }

    #[test]
    fn vanishes_on_the_diagonal() {
        // S_w(x, y) with x = y (generic rationals) vanishes for w != id
        let vals: Vec<i64> = vec![7, -3, 11, 5];
        for w in Permutation::all(4) {
            let mut assignment = BTreeMap::new();
            for i in 1..=4 {
                assignment.insert(Var::X(i), rat(vals[i - 1]));
                assignment.insert(Var::Y(i), rat(vals[i - 1]));
            }
            let value = double_schubert(&w).substitute(&assignment).unwrap();
            if w.is_identity() {
                assert_eq!(value, rat(1));
            } else {
                assert_eq!(value, BigRational::zero(), "w={w}");
            }
        }
    }

    #[test]
    fn identity_2_small() {
        assert!(check_identity_2(&Permutation::identity(3)));
        assert!(check_identity_2(&perm("213")));
    }

    #[test]
    fn identity_2_exhaustive_s4() {
        for w in Permutation::all(4) {
            assert!(check_identity_2(&w), "identity (2) failed for w={w}");
        }
    }

    #[test]
    fn transition_identity_s4() {
        for w in Permutation::all(4) {
            if !w.is_identity() {
                assert!(check_transition_identity(&w), "transition failed for w={w}");
            }
        }
    }

    #[test]
    fn path_independence_s4() {
        for w in Permutation::all(4) {
            assert_eq!(*double_schubert(&w), *double_schubert_alt_path(&w), "w={w}");
        }
    }

    #[test]
    fn stability_under_padding() {
        for w in Permutation::all(3) {
            for m in 1..=2 {
                let padded = w.pad(m);
                let lifted = double_schubert(&w).pad_to(3 + m);
                assert_eq!(*double_schubert(&padded), lifted, "w={w} m={m}");
            }
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let s = double_schubert(&perm("2413"));
        let back = SparsePoly::parse(&s.render(), s.n()).unwrap();
        assert_eq!(*s, back);
        assert_eq!(SparsePoly::zero(2).render(), "0");
        assert_eq!(SparsePoly::parse("0", 2).unwrap(), SparsePoly::zero(2));
    }

    fn arb_poly(n: usize, max_terms: usize, max_deg: u32) -> impl Strategy<Value = SparsePoly> {
        let term = (
            proptest::collection::vec(0..=max_deg, n),
            proptest::collection::vec(0..=1u32, n),
            -9i64..=9,
        );
        proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
            let mut p = SparsePoly::zero(n);
            for (xs, ys, c) in terms {
                p.insert(Mono { xs, ys }, BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn divided_difference_squares_to_zero(p in arb_poly(3, 6, 4), i in 1usize..3) {
            let d = p.divided_difference(i);
            prop_assert!(d.divided_difference(i).is_zero());
        }

        #[test]
        fn braid_relation(p in arb_poly(3, 6, 4)) {
            let lhs = p.divided_difference(2).divided_difference(1).divided_difference(2);
            let rhs = p.divided_difference(1).divided_difference(2).divided_difference(1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn render_parse_identity(p in arb_poly(2, 5, 3)) {
            let back = SparsePoly::parse(&p.render(), 2).unwrap();
            prop_assert_eq!(p, back);
        }
    }
}
