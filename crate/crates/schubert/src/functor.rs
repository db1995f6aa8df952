//! The Z/2-graded Schubert functor: ambient row-wise divided-power spaces,
//! column-wise super-exterior spaces, the projection map between them, the
//! BSL image basis, and linear-algebra straightening.
//!
//! A row tensor basis element assigns to each row `k` of `D(w)` a multiset
//! of letters from `{n', ..., 1', 1, ..., k}` of size `r_k(w)`, with marked
//! letters pairwise distinct inside a row (rows are divided powers of the
//! unmarked letters and exterior powers of the marked ones). A column
//! basis element assigns to each column `j` a multiset with unmarked
//! letters pairwise distinct, marked letters `k'` restricted to `k <= j`
//! (the flag quotient), and unmarked letters at most `w^{-1}(j)` (columns
//! are exterior powers of the unmarked letters and symmetric powers of the
//! marked ones).
//!
//! The image map distributes every row multiset over that row's cells in
//! all distinct ways and collapses the columns. Signs follow the super
//! conventions fixed below; the overall normalization of the codomain
//! basis is a free choice, and everything downstream (ranks, dimensions,
//! characters, homology) is independent of it. Internal coherence is
//! pinned by the symbolic `d o d = 0` checks in [`crate::complex`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::{self, Solve};
use crate::perm::Permutation;
use crate::poly::SparsePoly;
use crate::superlabel::{enumerate_bsl, monomial, Labeling, SuperLetter, Weight};
use crate::Error;

// Sign conventions. Rows antisymmetrize their marked letters; reordering
// the cell tensor from row-major to column-major order is the super
// braiding, so two marked letters crossing each other (one strictly
// northeast of the other) contribute a sign; inside a column, sorting to
// canonical order anticommutes every pair except marked-marked (those
// span the symmetric factor). Chain coherence pins this package: with any
// piece flipped, either the image map stops factoring through the BSL
// span or the symbolic d o d = 0 checks in `crate::complex` fail.

/// Per-row multisets of super letters, the basis of the row tensor space.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowElement {
    n: usize,
    rows: Vec<Vec<SuperLetter>>, // rows[k-1] = letters of row k, sorted ascending
}

impl RowElement {
    pub fn new(n: usize, mut rows: Vec<Vec<SuperLetter>>) -> Self {
        rows.resize(n, Vec::new());
        for row in &mut rows {
            row.sort();
        }
        RowElement { n, rows }
    }

    /// The row multisets of a labeling (the placement is forgotten; a
    /// labeling and its row-sorted form name the same tensor).
    pub fn from_labeling(t: &Labeling) -> Self {
        let n = t.w().n();
        let mut rows = vec![Vec::new(); n];
        for ((i, _), l) in t.entries() {
            rows[i - 1].push(l);
        }
        for row in &mut rows {
            row.sort();
        }
        RowElement { n, rows }
    }

    pub fn rows(&self) -> &[Vec<SuperLetter>] {
        &self.rows
    }

    pub fn weight(&self) -> Weight {
        let mut wt = Weight::zero(self.n);
        for row in &self.rows {
            for &l in row {
                wt.add(l);
            }
        }
        wt
    }

    /// Checks the shape constraints against `D(w)`: row sizes `r_k(w)`,
    /// unmarked letters at most the row index, marked letters distinct
    /// within each row.
    pub fn validate(&self, w: &Permutation) -> Result<(), Error> {
        if self.n != w.n() {
            return Err(Error::BadRowElement(format!("size {} does not match {w}", self.n)));
        }
        for k in 1..=self.n {
            let row = &self.rows[k - 1];
            if row.len() != w.diagram().row_count(k) {
                return Err(Error::BadRowElement(format!(
                    "row {k} has {} letters, expected {}",
                    row.len(),
                    w.diagram().row_count(k)
                )));
            }
            let mut seen = Vec::new();
            for &l in row {
                if l.is_marked() {
                    if seen.contains(&l) {
                        return Err(Error::BadRowElement(format!(
                            "marked letter {l} repeats in row {k}"
                        )));
                    }
                    seen.push(l);
                } else if l.index() > k {
                    return Err(Error::BadRowElement(format!(
                        "unmarked letter {l} exceeds its row index {k}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Per-column multisets of super letters, the basis of the column space.
/// Stored in canonical (sorted) order; the Koszul sign that reaches
/// canonical order is carried by the coefficient, not the element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnElement {
    cols: Vec<Vec<SuperLetter>>, // cols[j-1] = letters of column j, sorted ascending
}

impl ColumnElement {
    pub fn cols(&self) -> &[Vec<SuperLetter>] {
        &self.cols
    }

    pub fn weight(&self, n: usize) -> Weight {
        let mut wt = Weight::zero(n);
        for col in &self.cols {
            for &l in col {
                wt.add(l);
            }
        }
        wt
    }
}

/// A vector in the column space with integer coordinates.
pub type ColumnVector = BTreeMap<ColumnElement, i64>;

// Distinct arrangements of a sorted multiset, each with the sign
// (-1)^{inversions among marked letters}.
fn arrangements(row: &[SuperLetter]) -> Vec<(Vec<SuperLetter>, i64)> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(row.len());
    let mut remaining = row.to_vec();
    fn go(
        current: &mut Vec<SuperLetter>,
        remaining: &mut Vec<SuperLetter>,
        out: &mut Vec<(Vec<SuperLetter>, i64)>,
    ) {
        if remaining.is_empty() {
            let mut sign = 1i64;
            for a in 0..current.len() {
                for b in a + 1..current.len() {
                    if current[a].is_marked() && current[b].is_marked() && current[a] > current[b] {
                        sign = -sign;
                    }
                }
            }
            out.push((current.clone(), sign));
            return;
        }
        let mut used = Vec::new();
        for idx in 0..remaining.len() {
            let letter = remaining[idx];
            if used.contains(&letter) {
                continue;
            }
            used.push(letter);
            remaining.remove(idx);
            current.push(letter);
            go(current, remaining, out);
            current.pop();
            remaining.insert(idx, letter);
        }
    }
    go(&mut current, &mut remaining, &mut out);
    out
}

/// The image map on a row tensor basis element: distribute each row's
/// multiset over that row's cells in all distinct ways, apply the braiding
/// from row order to column order, and collapse each column with the
/// super-exterior rules (zero on an unmarked repeat, zero on a marked
/// letter `k'` in column `j < k`, Koszul sign to canonical order).
pub fn phi(t: &RowElement, w: &Permutation) -> Result<ColumnVector, Error> {
    t.validate(w)?;
    let n = w.n();
    let diagram = w.diagram();
    let row_cells: Vec<Vec<(usize, usize)>> = (1..=n).map(|k| diagram.row(k)).collect();
    let per_row: Vec<Vec<(Vec<SuperLetter>, i64)>> = (1..=n)
        .map(|k| {
            let row = &t.rows()[k - 1];
            if row.is_empty() {
                vec![(Vec::new(), 1)]
            } else {
                arrangements(row)
            }
        })
        .collect();

    let mut out: ColumnVector = BTreeMap::new();
    let mut choice = vec![0usize; n];
    loop {
        // assemble the placed labeling for this choice of arrangements
        let mut placed: Vec<((usize, usize), SuperLetter)> = Vec::new();
        let mut sign = 1i64;
        for k in 1..=n {
            let (arrangement, row_sign) = &per_row[k - 1][choice[k - 1]];
            sign *= row_sign;
            for (cell, &letter) in row_cells[k - 1].iter().zip(arrangement.iter()) {
                placed.push((*cell, letter));
            }
        }
        {
            // marked letters crossing from row-major to column-major order
            for a in 0..placed.len() {
                for b in a + 1..placed.len() {
                    let ((i1, j1), l1) = placed[a];
                    let ((i2, j2), l2) = placed[b];
                    if l1.is_marked() && l2.is_marked() && i1 < i2 && j1 > j2 {
                        sign = -sign;
                    }
                }
            }
        }
        if let Some((element, col_sign)) = collapse_columns(&placed, w) {
            let entry = out.entry(element).or_insert(0);
            *entry = entry
                .checked_add(sign * col_sign)
                .expect("column coefficients stay far below i64 range");
        }
        // advance the mixed-radix counter over arrangement choices
        let mut k = 0;
        loop {
            if k == n {
                let out = out.into_iter().filter(|(_, c)| *c != 0).collect();
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < per_row[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

// Collapses a placed labeling column by column; returns the canonical
// column element and the sorting sign, or None if some column dies.
fn collapse_columns(
    placed: &[((usize, usize), SuperLetter)],
    w: &Permutation,
) -> Option<(ColumnElement, i64)> {
    let n = w.n();
    let mut cols: Vec<Vec<SuperLetter>> = vec![Vec::new(); n];
    // column words read top to bottom
    let mut by_col: Vec<Vec<(usize, SuperLetter)>> = vec![Vec::new(); n];
    for &((i, j), l) in placed {
        by_col[j - 1].push((i, l));
    }
    let mut sign = 1i64;
    for j in 1..=n {
        let mut word = by_col[j - 1].clone();
        word.sort_by_key(|&(i, _)| i);
        let letters: Vec<SuperLetter> = word.into_iter().map(|(_, l)| l).collect();
        for (a, &la) in letters.iter().enumerate() {
            if la.is_marked() && la.index() > j {
                return None; // killed by the flag quotient
            }
            for &lb in &letters[a + 1..] {
                if la == lb && !la.is_marked() {
                    return None; // unmarked repeat in an exterior power
                }
                if la > lb {
                    // an inversion pair; marked letters commute, everything
                    // else anticommutes
                    let flip = if la.is_marked() && lb.is_marked() {
                        false
                    } else if !la.is_marked() && !lb.is_marked() {
                        true
                    } else {
                        true
                    };
                    if flip {
                        sign = -sign;
                    }
                }
            }
        }
        let mut sorted = letters;
        sorted.sort();
        cols[j - 1] = sorted;
    }
    Some((ColumnElement { cols }, sign))
}

/// The Schubert functor's concrete presentation: the BSL basis together
/// with the matrix of their images in column coordinates.
pub struct FunctorImage {
    w: Permutation,
    bsl_basis: Vec<Labeling>,
    row_elems: Vec<RowElement>,
    col_basis: Vec<ColumnElement>,
    col_index: BTreeMap<ColumnElement, usize>,
    /// `matrix[r][c]` = coefficient of column element `r` in the image of
    /// BSL `c`.
    matrix: Vec<Vec<i64>>,
    /// Weight blocks: the image matrix is block diagonal across weights.
    blocks: BTreeMap<Weight, Block>,
}

struct Block {
    bsl_cols: Vec<usize>,
    col_rows: Vec<usize>,
}

impl FunctorImage {
    pub fn w(&self) -> &Permutation {
        &self.w
    }

    /// BSLs ordered by (homological degree, serialized form).
    pub fn bsl_basis(&self) -> &[Labeling] {
        &self.bsl_basis
    }

    pub fn row_elements(&self) -> &[RowElement] {
        &self.row_elems
    }

    pub fn col_basis(&self) -> &[ColumnElement] {
        &self.col_basis
    }

    pub fn matrix(&self) -> &Vec<Vec<i64>> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.bsl_basis.len()
    }

    /// JSON dump: basis labelings, column elements, and sparse triplets.
    pub fn dump(&self) -> serde_json::Value {
        let triplets: Vec<serde_json::Value> = self
            .matrix
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter().enumerate().filter(|(_, v)| **v != 0).map(move |(c, v)| {
                    serde_json::json!([r, c, v])
                })
            })
            .collect();
        let cols: Vec<String> = self
            .col_basis
            .iter()
            .map(|e| {
                let parts: Vec<String> = e
                    .cols()
                    .iter()
                    .enumerate()
                    .filter(|(_, col)| !col.is_empty())
                    .map(|(j, col)| {
                        let letters: Vec<String> = col.iter().map(|l| l.to_string()).collect();
                        format!("c{}:{}", j + 1, letters.join(","))
                    })
                    .collect();
                parts.join(" ")
            })
            .collect();
        serde_json::json!({
            "w": self.w.to_string(),
            "bsl": self.bsl_basis.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
            "columns": cols,
            "matrix": triplets,
        })
    }
}

/// Builds the image matrix of all BSLs of `w` and verifies that it has
/// full column rank over the rationals, weight block by weight block.
pub fn build_functor_image(w: &Permutation) -> Result<FunctorImage, Error> {
    let mut bsl_basis = enumerate_bsl(w);
    bsl_basis.sort_by_key(|t| {
        (
            t.homological_degree(),
            t.entries().map(|((i, j), l)| (i, j, l)).collect::<Vec<_>>(),
        )
    });
    let row_elems: Vec<RowElement> = bsl_basis.iter().map(RowElement::from_labeling).collect();
    {
        let mut seen = row_elems.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != row_elems.len() {
            return Err(Error::RankDeficient(format!(
                "distinct BSLs of {w} share a row element"
            )));
        }
    }
    let images: Vec<ColumnVector> = row_elems
        .iter()
        .map(|re| phi(re, w))
        .collect::<Result<_, _>>()?;
    for (t, img) in bsl_basis.iter().zip(&images) {
        if img.is_empty() {
            return Err(Error::RankDeficient(format!("BSL {t:?} has zero image")));
        }
    }
    let mut col_index: BTreeMap<ColumnElement, usize> = BTreeMap::new();
    for img in &images {
        for e in img.keys() {
            let next = col_index.len();
            col_index.entry(e.clone()).or_insert(next);
        }
    }
    // re-index in sorted order
    let col_basis: Vec<ColumnElement> = col_index.keys().cloned().collect();
    for (i, e) in col_basis.iter().enumerate() {
        *col_index.get_mut(e).unwrap() = i;
    }
    let mut matrix = vec![vec![0i64; bsl_basis.len()]; col_basis.len()];
    for (c, img) in images.iter().enumerate() {
        for (e, &v) in img {
            matrix[col_index[e]][c] = v;
        }
    }
    // weight blocks
    let n = w.n();
    let mut blocks: BTreeMap<Weight, Block> = BTreeMap::new();
    for (c, t) in bsl_basis.iter().enumerate() {
        blocks
            .entry(t.weight())
            .or_insert_with(|| Block { bsl_cols: Vec::new(), col_rows: Vec::new() })
            .bsl_cols
            .push(c);
    }
    for (r, e) in col_basis.iter().enumerate() {
        if let Some(block) = blocks.get_mut(&e.weight(n)) {
            block.col_rows.push(r);
        }
    }
    let image = FunctorImage { w: w.clone(), bsl_basis, row_elems, col_basis, col_index, matrix, blocks };
    // basis theorem check: full column rank within every weight block
    for (weight, block) in &image.blocks {
        let sub: Vec<Vec<BigInt>> = block
            .col_rows
            .iter()
            .map(|&r| block.bsl_cols.iter().map(|&c| BigInt::from(image.matrix[r][c])).collect())
            .collect();
        let rank = linalg::rank_int(&sub);
        if rank != block.bsl_cols.len() {
            return Err(Error::RankDeficient(format!(
                "weight block {weight:?} of {w}: rank {rank} < {}",
                block.bsl_cols.len()
            )));
        }
    }
    Ok(image)
}

/// Writes a column-space vector as an exact rational combination of BSL
/// images. Fails with the residual witness if the vector is outside the
/// span.
pub fn straighten(v: &ColumnVector, f: &FunctorImage) -> Result<Vec<BigRational>, Error> {
    let mut coeffs = vec![BigRational::zero(); f.bsl_basis.len()];
    if v.is_empty() {
        return Ok(coeffs);
    }
    let n = f.w.n();
    // split the vector by weight and solve inside each block
    let mut by_weight: BTreeMap<Weight, Vec<(&ColumnElement, i64)>> = BTreeMap::new();
    for (e, &c) in v {
        by_weight.entry(e.weight(n)).or_default().push((e, c));
    }
    for (weight, support) in by_weight {
        let Some(block) = f.blocks.get(&weight) else {
            return Err(Error::OutsideSpan(support.len()));
        };
        let mut rhs = vec![vec![BigRational::zero()]; block.col_rows.len()];
        for (e, c) in &support {
            match f.col_index.get(*e).map(|&r| block.col_rows.iter().position(|&x| x == r)) {
                Some(Some(local)) => rhs[local][0] = BigRational::from(BigInt::from(*c)),
                _ => return Err(Error::OutsideSpan(support.len())),
            }
        }
        let a: Vec<Vec<BigRational>> = block
            .col_rows
            .iter()
            .map(|&r| {
                block
                    .bsl_cols
                    .iter()
                    .map(|&c| BigRational::from(BigInt::from(f.matrix[r][c])))
                    .collect()
            })
            .collect();
        match linalg::solve_multi_q(&a, &rhs) {
            Solve::Unique(x) => {
                for (local, &c) in block.bsl_cols.iter().enumerate() {
                    coeffs[c] = x[local][0].clone();
                }
            }
            Solve::Inconsistent(row) => return Err(Error::OutsideSpan(row)),
            Solve::RankDeficient => {
                return Err(Error::RankDeficient(format!("weight block of {}", f.w)))
            }
        }
    }
    Ok(coeffs)
}

/// Expands an integer combination of BSL images back into column
/// coordinates; inverse of [`straighten`] on the image.
pub fn expand(coeffs: &[BigRational], f: &FunctorImage) -> ColumnVector {
    let mut out: BTreeMap<ColumnElement, BigRational> = BTreeMap::new();
    for (c, coeff) in coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        for (r, e) in f.col_basis.iter().enumerate() {
            let v = f.matrix[r][c];
            if v != 0 {
                let entry = out.entry(e.clone()).or_insert_with(BigRational::zero);
                *entry += coeff * BigRational::from(BigInt::from(v));
            }
        }
    }
    out.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| {
            assert!(c.is_integer(), "expansion of an integer vector stays integral");
            let digits = c.to_integer();
            let as_i64 = i64::try_from(&digits).expect("column coefficients fit in i64");
            (e, as_i64)
        })
        .collect()
}

/// The supercharacter of the functor: the sum of `m(T)` over the BSL
/// basis, which equals the double Schubert polynomial of `w`. The ordinary
/// character is the same sum with `x -> -x`, available through
/// [`SparsePoly::negate_x`].
pub fn graded_character(f: &FunctorImage) -> SparsePoly {
    let mut out = SparsePoly::zero(f.w.n());
    for t in &f.bsl_basis {
        out = out + monomial(t);
    }
    out
}
