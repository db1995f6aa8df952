//! Schubert complexes of flagged maps: terms graded by unmarked-letter
//! count, differentials computed symbolically over the generic matrix and
//! specialized exactly to rational or prime-field points.
//!
//! The term of homological degree `i` has the BSLs of `D(w)` with `i`
//! unmarked letters as its basis. The differential applies the ambient
//! row-tensor differential (replace one unmarked letter `u` in row `r` by
//! `sum_m d_{m,u} m'`, dropping terms where `m'` repeats in the row, with
//! the sign of the unmarked letters in earlier rows and of the wedge
//! insertion), pushes the result through the image map, and straightens it
//! back onto the BSL basis one weight block at a time. The resulting
//! entries are integer-linear in the generic matrix entries; this is
//! asserted during construction.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::functor::{build_functor_image, phi, ColumnVector, FunctorImage, RowElement};
use crate::linalg::{self, Fp, Solve};
use crate::perm::Permutation;
use crate::superlabel::{Labeling, SuperLetter, Weight};
use crate::Error;

/// Index of a generic matrix entry `d_{m,u}`: `m` is the row
/// (marked-letter) index, `u` the column (unmarked-letter) index, both
/// 1-based.
pub type DVar = (usize, usize);

/// A homogeneous integer-linear form in the generic matrix entries.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinForm {
    terms: BTreeMap<DVar, BigInt>,
}

impl LinForm {
    pub fn zero() -> Self {
        LinForm { terms: BTreeMap::new() }
    }

    pub fn var(m: usize, u: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((m, u), BigInt::one());
        LinForm { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, var: DVar, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(var) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DVar, &BigInt)> {
        self.terms.iter()
    }

    /// Evaluates at a rational point; the point matrix must cover every
    /// variable present.
    pub fn eval_q(&self, point: &[Vec<BigRational>]) -> BigRational {
        let mut out = BigRational::zero();
        for (&(m, u), c) in &self.terms {
            out += BigRational::from(c.clone()) * &point[m - 1][u - 1];
        }
        out
    }

    pub fn eval_fp(&self, field: Fp, point: &[Vec<u64>]) -> u64 {
        let mut out = 0u64;
        for (&(m, u), c) in &self.terms {
            out = field.add(out, field.mul(field.reduce_int(c), point[m - 1][u - 1]));
        }
        out
    }

    /// Renders as e.g. `2*d[3][1] - d[2][2]`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (&(m, u), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&format!("d[{m}][{u}]"));
        }
        out
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A flagged map `F_0 -> F_1` with the standard coordinate flags. Entry
/// `(i, j)` is the coefficient of `e'_i` in the image of `e_j`. `None`
/// entries mean the generic matrix of independent variables.
#[derive(Clone, Debug)]
pub struct FlaggedMap {
    pub n: usize,
    pub entries: Option<Vec<Vec<BigRational>>>,
}

impl FlaggedMap {
    pub fn generic(n: usize) -> Self {
        FlaggedMap { n, entries: None }
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        FlaggedMap { n, entries: Some(entries) }
    }

    pub fn zero(n: usize) -> Self {
        FlaggedMap { n, entries: Some(vec![vec![BigRational::zero(); n]; n]) }
    }

    pub fn from_entries(entries: Vec<Vec<BigRational>>) -> Result<Self, Error> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::BadMatrix("matrix must be square".into()));
        }
        Ok(FlaggedMap { n, entries: Some(entries) })
    }
}

/// A Schubert complex: BSL-term bases graded by unmarked-letter count and
/// differentials with entries linear in the generic matrix.
pub struct ChainComplex {
    w: Permutation,
    map: FlaggedMap,
    terms: Vec<Vec<Labeling>>,
    /// `diffs[i]` is the matrix of `d_{i+1}: C_{i+1} -> C_i`, with
    /// `|C_i|` rows and `|C_{i+1}|` columns.
    diffs: Vec<Vec<Vec<LinForm>>>,
}

/// One replacement step of the row differential.
struct RowDiffTerm {
    var: DVar,
    target: RowElement,
    sign: i64,
}

fn env_flag(name: &str, default: bool) -> bool {
    std::env::var(name).map(|v| v == "1").unwrap_or(default)
}

// d on the row tensor: replace one unmarked letter value u of row r by the
// marked letter m', with the sign of the unmarked letters in earlier rows
// and of sorting the new marked letter into the row wedge.
fn row_differential(re: &RowElement, n: usize) -> Vec<RowDiffTerm> {
    let count_marked = env_flag("SIGN_D_MARKED", false);
    let insert_right = env_flag("SIGN_D_INSERT_RIGHT", false);
    let mut out = Vec::new();
    let mut unmarked_before = 0usize;
    let mut marked_before = 0usize;
    for r in 1..=n {
        let row = &re.rows()[r - 1];
        let before = if count_marked { marked_before } else { unmarked_before };
        let row_sign = if before % 2 == 0 { 1i64 } else { -1 };
        let mut seen = Vec::new();
        for &u in row.iter().filter(|l| !l.is_marked()) {
            if seen.contains(&u) {
                continue;
            }
            seen.push(u);
            for m in 1..n {
                let marked = SuperLetter::marked(m);
                if row.contains(&marked) {
                    continue; // wedge kills a repeated marked letter
                }
                // insertion: the new marked letter passes the marked
                // letters it sorts across
                let passes = if insert_right {
                    row.iter().filter(|l| l.is_marked() && **l > marked).count()
                } else {
                    row.iter().filter(|l| l.is_marked() && **l < marked).count()
                };
                let insert_sign = if passes % 2 == 0 { 1i64 } else { -1 };
                let mut rows = re.rows().to_vec();
                let row_vec = &mut rows[r - 1];
                let pos = row_vec.iter().position(|&l| l == u).unwrap();
                row_vec.remove(pos);
                row_vec.push(marked);
                row_vec.sort();
                out.push(RowDiffTerm {
                    var: (m, u.index()),
                    target: RowElement::new(n, rows),
                    sign: row_sign * insert_sign,
                });
            }
        }
        unmarked_before += row.iter().filter(|l| !l.is_marked()).count();
        marked_before += row.iter().filter(|l| l.is_marked()).count();
    }
    out
}

/// Builds the Schubert complex of `w` over the flagged map `f`. The
/// differentials are computed once, symbolically; `f`'s concrete entries
/// (when present) are only used by the homology methods as the default
/// specialization.
pub fn build_complex(w: &Permutation, f: &FlaggedMap) -> Result<ChainComplex, Error> {
    if f.n < w.n() {
        return Err(Error::SizeMismatch(format!(
            "flagged map of size {} cannot carry the complex of {w} (need at least {})",
            f.n,
            w.n()
        )));
    }
    let image = build_functor_image(w)?;
    let length = w.length();
    let n = w.n();
    // split the BSL basis by homological degree (the basis is sorted by it)
    let mut terms: Vec<Vec<Labeling>> = vec![Vec::new(); length + 1];
    let mut term_index: Vec<BTreeMap<Weight, Vec<usize>>> = vec![BTreeMap::new(); length + 1];
    let mut global_to_local: Vec<(usize, usize)> = Vec::new();
    for (g, t) in image.bsl_basis().iter().enumerate() {
        let d = t.homological_degree();
        global_to_local.push((d, terms[d].len()));
        term_index[d].entry(t.weight()).or_default().push(g);
        terms[d].push(t.clone());
    }
    let mut diffs: Vec<Vec<Vec<LinForm>>> = Vec::new();
    let mut phi_cache: BTreeMap<RowElement, ColumnVector> = BTreeMap::new();
    for i in 1..=length {
        let mut matrix = vec![vec![LinForm::zero(); terms[i].len()]; terms[i - 1].len()];
        // batched straightening: per weight block of degree i-1, collect
        // one right-hand side per (source, variable) pair
        struct Pending {
            source_local: usize,
            var: DVar,
            rhs: BTreeMap<usize, BigInt>, // row index in the full column basis
        }
        let mut by_weight: BTreeMap<Weight, Vec<Pending>> = BTreeMap::new();
        for (src_local, t) in terms[i].iter().enumerate() {
            let re = RowElement::from_labeling(t);
            let mut per_var: BTreeMap<DVar, BTreeMap<usize, BigInt>> = BTreeMap::new();
            for term in row_differential(&re, n) {
                let img = match phi_cache.get(&term.target) {
                    Some(hit) => hit.clone(),
                    None => {
                        let computed = phi(&term.target, w)?;
                        phi_cache.insert(term.target.clone(), computed.clone());
                        computed
                    }
                };
                if img.is_empty() {
                    continue;
                }
                let rhs = per_var.entry(term.var).or_default();
                for (e, &c) in &img {
                    let row = image
                        .col_basis()
                        .binary_search(e)
                        .expect("image support lies in the collected column basis");
                    let entry = rhs.entry(row).or_insert_with(BigInt::zero);
                    *entry += BigInt::from(term.sign * c);
                }
            }
            for (var, rhs) in per_var {
                let rhs: BTreeMap<usize, BigInt> =
                    rhs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if rhs.is_empty() {
                    continue;
                }
                // the replaced letter u became m', so the target weight is
                // determined by the source weight
                let mut weight = terms[i][src_local].weight();
                weight.remove(SuperLetter::unmarked(var.1));
                weight.add(SuperLetter::marked(var.0));
                by_weight
                    .entry(weight)
                    .or_default()
                    .push(Pending { source_local: src_local, var, rhs });
            }
        }
        for (weight, pendings) in by_weight {
            let Some(target_globals) = term_index[i - 1].get(&weight) else {
                return Err(Error::OutsideSpan(pendings.len()));
            };
            // rows of the block: column elements of this weight with
            // support in any pending RHS or in the target images
            let mut rows: Vec<usize> = Vec::new();
            for &g in target_globals {
                for (r, row) in image.matrix().iter().enumerate() {
                    if row[g] != 0 && !rows.contains(&r) {
                        rows.push(r);
                    }
                }
            }
            for p in &pendings {
                for &r in p.rhs.keys() {
                    if !rows.contains(&r) {
                        rows.push(r);
                    }
                }
            }
            rows.sort_unstable();
            let a: Vec<Vec<BigRational>> = rows
                .iter()
                .map(|&r| {
                    target_globals
                        .iter()
                        .map(|&g| BigRational::from(BigInt::from(image.matrix()[r][g])))
                        .collect()
                })
                .collect();
            let b: Vec<Vec<BigRational>> = rows
                .iter()
                .map(|&r| {
                    pendings
                        .iter()
                        .map(|p| {
                            BigRational::from(
                                p.rhs.get(&r).cloned().unwrap_or_else(BigInt::zero),
                            )
                        })
                        .collect()
                })
                .collect();
            let solution = match linalg::solve_multi_q(&a, &b) {
                Solve::Unique(x) => x,
                Solve::Inconsistent(row) => return Err(Error::OutsideSpan(row)),
                Solve::RankDeficient => {
                    return Err(Error::RankDeficient(format!("weight block of {w}")))
                }
            };
            for (k, p) in pendings.iter().enumerate() {
                for (local, &g) in target_globals.iter().enumerate() {
                    let c = &solution[local][k];
                    if c.is_zero() {
                        continue;
                    }
                    assert!(
                        c.is_integer(),
                        "straightened differential entries are integral over Z"
                    );
                    let (_, target_local) = global_to_local[g];
                    matrix[target_local][p.source_local].add_term(p.var, c.to_integer());
                }
            }
        }
        diffs.push(matrix);
    }
    Ok(ChainComplex { w: w.clone(), map: f.clone(), terms, diffs })
}

impl ChainComplex {
    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn map(&self) -> &FlaggedMap {
        &self.map
    }

    /// BSL bases by homological degree `0..=l(w)`.
    pub fn terms(&self) -> &[Vec<Labeling>] {
        &self.terms
    }

    /// The matrix of `d_i: C_i -> C_{i-1}` for `i` in `1..=l(w)`.
    pub fn differential(&self, i: usize) -> &Vec<Vec<LinForm>> {
        &self.diffs[i - 1]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, t)| if i % 2 == 0 { t.len() as i64 } else { -(t.len() as i64) })
            .sum()
    }

    /// Symbolic check that every composite `d_i . d_{i+1}` vanishes
    /// identically as a quadratic polynomial in the generic entries.
    pub fn verify_dd_zero(&self) -> bool {
        for i in 0..self.diffs.len().saturating_sub(1) {
            let d_lo = &self.diffs[i]; // d_{i+1}: C_{i+1} -> C_i
            let d_hi = &self.diffs[i + 1]; // d_{i+2}: C_{i+2} -> C_{i+1}
            let rows = d_lo.len();
            let mid = d_hi.len();
            let cols = if mid == 0 { 0 } else { d_hi[0].len() };
            for r in 0..rows {
                for c in 0..cols {
                    // product entry as a quadratic form over commuting vars
                    let mut quad: BTreeMap<(DVar, DVar), BigInt> = BTreeMap::new();
                    for k in 0..mid {
                        for (&v1, c1) in self.diffs[i][r][k].terms() {
                            for (&v2, c2) in self.diffs[i + 1][k][c].terms() {
                                let key = if v1 <= v2 { (v1, v2) } else { (v2, v1) };
                                let entry = quad.entry(key).or_insert_with(BigInt::zero);
                                *entry += c1 * c2;
                            }
                        }
                    }
                    if quad.values().any(|v| !v.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Specializes every differential at a rational point.
    pub fn specialize_q(&self, point: &[Vec<BigRational>]) -> Vec<Vec<Vec<BigRational>>> {
        self.diffs
            .iter()
            .map(|mat| mat.iter().map(|row| row.iter().map(|e| e.eval_q(point)).collect()).collect())
            .collect()
    }

    /// Specializes every differential into `F_p`.
    pub fn specialize_fp(&self, field: Fp, point: &[Vec<u64>]) -> Vec<Vec<Vec<u64>>> {
        self.diffs
            .iter()
            .map(|mat| {
                mat.iter().map(|row| row.iter().map(|e| e.eval_fp(field, point)).collect()).collect()
            })
            .collect()
    }

    /// Exact homology ranks `h_0, ..., h_l` at a rational specialization:
    /// `h_i = dim ker d_i - rank d_{i+1}`.
    pub fn homology_ranks_q(&self, point: &[Vec<BigRational>]) -> Vec<usize> {
        let mats = self.specialize_q(point);
        let ranks: Vec<usize> = mats.iter().map(|m| linalg::rank_q(m)).collect();
        self.homology_from_ranks(&ranks)
    }

    /// Exact homology ranks over a prime field.
    pub fn homology_ranks_fp(&self, field: Fp, point: &[Vec<u64>]) -> Vec<usize> {
        let mats = self.specialize_fp(field, point);
        let ranks: Vec<usize> = mats.iter().map(|m| linalg::rank_fp(m, field)).collect();
        self.homology_from_ranks(&ranks)
    }

    fn homology_from_ranks(&self, d_ranks: &[usize]) -> Vec<usize> {
        let l = self.terms.len() - 1;
        (0..=l)
            .map(|i| {
                let dim = self.terms[i].len();
                let rank_out = if i == 0 { 0 } else { d_ranks[i - 1] };
                let rank_in = if i == l { 0 } else { d_ranks[i] };
                dim - rank_out - rank_in
            })
            .collect()
    }

    /// Homology at the complex's own flagged map (requires concrete
    /// entries).
    pub fn homology_ranks(&self) -> Result<Vec<usize>, Error> {
        let entries = self
            .map
            .entries
            .as_ref()
            .ok_or_else(|| Error::MissingVariable("generic map has no homology point".into()))?;
        Ok(self.homology_ranks_q(entries))
    }

    /// JSON dump with sparse differential triplets rendered as scalar
    /// strings.
    pub fn dump(&self) -> serde_json::Value {
        let diffs: Vec<serde_json::Value> = self
            .diffs
            .iter()
            .map(|mat| {
                let triplets: Vec<serde_json::Value> = mat
                    .iter()
                    .enumerate()
                    .flat_map(|(r, row)| {
                        row.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(
                            move |(c, e)| serde_json::json!([r, c, e.render()]),
                        )
                    })
                    .collect();
                serde_json::Value::Array(triplets)
            })
            .collect();
        serde_json::json!({
            "w": self.w.to_string(),
            "ranks": self.ranks(),
            "differentials": diffs,
        })
    }
}

/// The rank of the cokernel fiber `h_0` of the complex specialized at a
/// rational point.
pub fn cokernel_fiber_rank(w: &Permutation, point: &[Vec<BigRational>]) -> Result<usize, Error> {
    let needed = w.n().saturating_sub(1);
    if point.len() < needed || point.iter().any(|row| row.len() < needed) {
        return Err(Error::SizeMismatch(format!(
            "point must cover a {needed}x{needed} generic block for {w}"
        )));
    }
    let complex = build_complex(w, &FlaggedMap::generic(w.n().max(point.len())))?;
    if complex.terms.len() == 1 {
        return Ok(complex.terms[0].len());
    }
    let d1 = complex.specialize_q(point).remove(0);
    Ok(complex.terms[0].len() - linalg::rank_q(&d1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    fn rat_matrix(vals: &[&[i64]]) -> Vec<Vec<BigRational>> {
        vals.iter().map(|row| row.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn identity_complex_is_a_point() {
        let w = Permutation::identity(3);
        let c = build_complex(&w, &FlaggedMap::generic(3)).unwrap();
        assert_eq!(c.ranks(), vec![1]);
        assert!(c.verify_dd_zero());
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn simple_transposition_complex_is_the_entry() {
        // S_{s_1} is the 1x1 complex (d_{1,1})
        let w = perm("21");
        let c = build_complex(&w, &FlaggedMap::generic(2)).unwrap();
        assert_eq!(c.ranks(), vec![1, 1]);
        let d1 = c.differential(1);
        assert_eq!(d1.len(), 1);
        assert_eq!(d1[0][0], LinForm::var(1, 1));
    }

    #[test]
    fn ranks_1423() {
        let w = perm("1423");
        let c = build_complex(&w, &FlaggedMap::generic(4)).unwrap();
        assert_eq!(c.ranks(), vec![3, 6, 3]);
        assert!(c.verify_dd_zero());
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn ranks_2413() {
        let w = perm("2413");
        let c = build_complex(&w, &FlaggedMap::generic(4)).unwrap();
        assert_eq!(c.ranks(), vec![2, 6, 6, 2]);
        assert!(c.verify_dd_zero());
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn dd_zero_symbolically_s4() {
        for w in Permutation::all(4) {
            let c = build_complex(&w, &FlaggedMap::generic(4)).unwrap();
            assert!(c.verify_dd_zero(), "d o d != 0 for w={w}");
        }
    }

    #[test]
    fn flagged_isomorphism_is_exact_s4() {
        let field = Fp::new(linalg::DEFAULT_PRIME);
        for w in Permutation::all(4) {
            if w.is_identity() {
                continue;
            }
            let c = build_complex(&w, &FlaggedMap::identity(4)).unwrap();
            let h = c.homology_ranks().unwrap();
            assert!(h.iter().all(|&x| x == 0), "w={w} h={h:?}");
            let point_fp: Vec<Vec<u64>> =
                (0..4).map(|i| (0..4).map(|j| u64::from(i == j)).collect()).collect();
            let h = c.homology_ranks_fp(field, &point_fp);
            assert!(h.iter().all(|&x| x == 0), "w={w} over F_p h={h:?}");
        }
    }

    #[test]
    fn zero_map_has_full_homology() {
        let w = perm("1423");
        let c = build_complex(&w, &FlaggedMap::zero(4)).unwrap();
        assert_eq!(c.homology_ranks().unwrap(), vec![3, 6, 3]);
    }

    #[test]
    fn paper_generic_ranks_1423() {
        // specialize the two-row generic map to seeded random rationals:
        // the complex 0 -> A^3 -> A^6 -> A^3 is generically exact
        let w = perm("1423");
        let c = build_complex(&w, &FlaggedMap::generic(4)).unwrap();
        let point = rat_matrix(&[
            &[3, -7, 0, 0],
            &[2, 5, 0, 0],
            &[-4, 11, 0, 0],
            &[0, 0, 0, 0],
        ]);
        let mats = c.specialize_q(&point);
        assert_eq!(linalg::rank_q(&mats[0]), 3); // d_1: C_1 -> C_0
        assert_eq!(linalg::rank_q(&mats[1]), 3); // d_2: C_2 -> C_1
        assert_eq!(c.homology_ranks_q(&point), vec![0, 0, 0]);
    }

    #[test]
    fn on_locus_point_gives_a_line() {
        // point with first row of columns 1..2 zero and columns 1, 2
        // proportional on rows 1..3: the smooth locus of w = 2413
        let w = perm("2413");
        let point = rat_matrix(&[
            &[0, 0, 9, 1],
            &[3, 6, -2, 5],
            &[7, 14, 4, -8],
            &[1, 2, 3, 4],
        ]);
        assert_eq!(cokernel_fiber_rank(&w, &point).unwrap(), 1);
        // generic invertible point: rank 0
        let generic = rat_matrix(&[
            &[5, 1, 0, 2],
            &[-3, 7, 4, 1],
            &[2, 0, 9, -6],
            &[1, 8, -2, 3],
        ]);
        assert_eq!(cokernel_fiber_rank(&w, &generic).unwrap(), 0);
        // 1x1 case: s_1 with d_{1,1} = 0
        let s1 = perm("21");
        let zero_11 = rat_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(cokernel_fiber_rank(&s1, &zero_11).unwrap(), 1);
    }

    #[test]
    fn differential_moves_weight_up_in_dominance() {
        let w = perm("2413");
        let c = build_complex(&w, &FlaggedMap::generic(4)).unwrap();
        for i in 1..=w.length() {
            let mat = c.differential(i);
            for (r, row) in mat.iter().enumerate() {
                for (col, entry) in row.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    let src = &c.terms()[i][col];
                    let dst = &c.terms()[i - 1][r];
                    assert_eq!(dst.homological_degree() + 1, src.homological_degree());
                    assert!(src.weight().dominance_leq(&dst.weight()));
                    // each variable records exactly the letter conversion
                    for (&(m, u), _) in entry.terms() {
                        let mut shifted = src.weight();
                        shifted.remove(SuperLetter::unmarked(u));
                        shifted.add(SuperLetter::marked(m));
                        assert_eq!(shifted, dst.weight());
                    }
                }
            }
        }
    }

    #[test]
    fn dump_renders_linear_forms() {
        let w = perm("21");
        let c = build_complex(&w, &FlaggedMap::generic(2)).unwrap();
        let dump = c.dump();
        assert_eq!(dump["ranks"], serde_json::json!([1, 1]));
        assert_eq!(dump["differentials"][0][0][2], "d[1][1]");
        let mut lf = LinForm::var(3, 1);
        lf.add_term((3, 1), BigInt::from(1));
        lf.add_term((2, 2), BigInt::from(-1));
        assert_eq!(lf.render(), "-d[2][2] + 2*d[3][1]");
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let w = perm("2413");
        assert!(matches!(
            build_complex(&w, &FlaggedMap::generic(3)),
            Err(Error::SizeMismatch(_))
        ));
    }
}
