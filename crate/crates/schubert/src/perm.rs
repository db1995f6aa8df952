//! Permutations in one-line notation, their diagrams, rank functions, the
//! two Bruhat orders, and maximal transitions.
//!
//! A permutation `w` of `{1, ..., n}` is stored as the word
//! `w(1) w(2) ... w(n)`. Multiplication is composition of functions:
//! `(u * v)(i) = u(v(i))`. The diagram and the rank table are computed
//! eagerly on construction and cached; permutations are immutable value
//! objects and cheap to clone.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// ```
/// use schubert::perm::Permutation;
///
/// let w: Permutation = "35142".parse().unwrap();
/// assert_eq!(w.length(), 6);
/// assert_eq!(w.apply(2), 5);
/// assert_eq!(w.inverse().apply(5), 2);
/// ```
#[derive(Clone)]
pub struct Permutation {
    word: Vec<usize>,
    length: usize,
    diagram: Diagram,
    // rank[(p-1)*n + (q-1)] = #{i <= p | w(i) <= q}
    rank: Vec<usize>,
}

/// The diagram of a permutation: the cell set
/// `{(i, w(j)) : i < j, w(i) > w(j)}` in matrix coordinates (row index
/// downwards, column index rightwards, both 1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
    cells: Vec<(usize, usize)>,
    row_counts: Vec<usize>,
    col_counts: Vec<usize>,
}

impl Diagram {
    /// Cells in row-major order.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of cells in row `k` (1-based).
    pub fn row_count(&self, k: usize) -> usize {
        self.row_counts[k - 1]
    }

    /// Number of cells in column `j` (1-based).
    pub fn col_count(&self, j: usize) -> usize {
        self.col_counts[j - 1]
    }

    /// Cells of column `j`, ordered top to bottom.
    pub fn column(&self, j: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.cells.iter().copied().filter(|&(_, c)| c == j).collect();
        out.sort();
        out
    }

    /// Cells of row `i`, ordered left to right.
    pub fn row(&self, i: usize) -> Vec<(usize, usize)> {
        self.cells.iter().copied().filter(|&(r, _)| r == i).collect()
    }
}

impl Permutation {
    /// Builds a permutation from its one-line word, validating that it is a
    /// bijection of `{1, ..., n}`.
    pub fn from_word(word: Vec<usize>) -> Result<Self, Error> {
        let n = word.len();
        if n == 0 {
            return Err(Error::ParsePermutation("empty word".into()));
        }
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::ParsePermutation(format!(
                    "{word:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self::from_word_unchecked(word))
    }

    fn from_word_unchecked(word: Vec<usize>) -> Self {
        let n = word.len();
        let mut length = 0;
        for i in 0..n {
            for j in i + 1..n {
                if word[i] > word[j] {
                    length += 1;
                }
            }
        }
        let mut cells = Vec::with_capacity(length);
        for j in 0..n {
            for i in 0..j {
                if word[i] > word[j] {
                    cells.push((i + 1, word[j]));
                }
            }
        }
        cells.sort();
        let mut row_counts = vec![0usize; n];
        let mut col_counts = vec![0usize; n];
        for &(r, c) in &cells {
            row_counts[r - 1] += 1;
            col_counts[c - 1] += 1;
        }
        let mut rank = vec![0usize; n * n];
        for p in 1..=n {
            for q in 1..=n {
                let mut count = 0;
                for i in 1..=p {
                    if word[i - 1] <= q {
                        count += 1;
                    }
                }
                rank[(p - 1) * n + (q - 1)] = count;
            }
        }
        Permutation {
            word,
            length,
            diagram: Diagram { n, cells, row_counts, col_counts },
            rank,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_word_unchecked((1..=n).collect())
    }

    /// The longest element `w0(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Self::from_word_unchecked((1..=n).map(|i| n + 1 - i).collect())
    }

    /// The simple transposition `s_i` inside `Sigma_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i + 1 <= n, "s_{i} does not fit in Sigma_{n}");
        Self::identity(n).times_transposition(i, i + 1)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` with a 1-based position.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Number of inversions; equals the size of the diagram.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut word = vec![0usize; n];
        for i in 1..=n {
            word[self.word[i - 1] - 1] = i;
        }
        Self::from_word_unchecked(word)
    }

    /// Function composition: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        let word = (1..=self.n()).map(|i| self.apply(other.apply(i))).collect();
        Self::from_word_unchecked(word)
    }

    /// Right multiplication by the transposition `t_{a,b}`: swaps the word
    /// entries at positions `a` and `b`.
    pub fn times_transposition(&self, a: usize, b: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(a - 1, b - 1);
        Self::from_word_unchecked(word)
    }

    /// `r_w(p, q) = #{i <= p | w(i) <= q}`.
    pub fn rank_function(&self, p: usize, q: usize) -> usize {
        assert!(
            p >= 1 && p <= self.n() && q >= 1 && q <= self.n(),
            "rank function indices out of range"
        );
        self.rank[(p - 1) * self.n() + (q - 1)]
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    /// Strong Bruhat order: `u <= w` iff `r_u(p,q) >= r_w(p,q)` for all
    /// `p, q` (the inequality on rank functions is reversed).
    pub fn strong_leq(&self, w: &Self) -> bool {
        assert_eq!(self.n(), w.n(), "comparing permutations of different sizes");
        self.rank.iter().zip(&w.rank).all(|(a, b)| a >= b)
    }

    /// Left weak Bruhat order: `u <=_W w` iff some reduced decomposition of
    /// `u` is a suffix of some reduced decomposition of `w`, equivalently
    /// `l(w u^{-1}) + l(u) = l(w)`.
    pub fn weak_leq(&self, w: &Self) -> bool {
        assert_eq!(self.n(), w.n(), "comparing permutations of different sizes");
        let wu_inv = w.compose(&self.inverse());
        wu_inv.length() + self.length() == w.length()
    }

    /// All `u <=_W w`, ordered by nondecreasing length and then by word.
    pub fn weak_order_ideal(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Permutation::all(self.n())
            .into_iter()
            .filter(|u| u.weak_leq(self))
            .collect();
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word.cmp(&b.word)));
        out
    }

    /// Cells `(i, j)` of the diagram with `w(i+1) = j`.
    pub fn border_cells(&self) -> Vec<(usize, usize)> {
        self.diagram
            .cells
            .iter()
            .copied()
            .filter(|&(i, j)| i < self.n() && self.apply(i + 1) == j)
            .collect()
    }

    /// Diagram cells with no diagram cell immediately below or to the right.
    pub fn southeast_corners(&self) -> Vec<(usize, usize)> {
        self.diagram
            .cells
            .iter()
            .copied()
            .filter(|&(i, j)| {
                !self.diagram.contains((i + 1, j)) && !self.diagram.contains((i, j + 1))
            })
            .collect()
    }

    /// `sum_k (k-1) * #{j > k | w(k) > w(j)}`.
    pub fn index(&self) -> usize {
        let n = self.n();
        let mut total = 0;
        for k in 1..=n {
            let inv = (k + 1..=n).filter(|&j| self.apply(k) > self.apply(j)).count();
            total += (k - 1) * inv;
        }
        total
    }

    /// The maximal transition of a non-identity permutation: the
    /// lexicographically maximal pair `(alpha, beta)` with `alpha < beta`
    /// and `w(alpha) > w(beta)`, together with `v = w t_{alpha,beta}`, the
    /// intermediate rows `gamma_t`, and `psi_t = v t_{gamma_t,alpha}`.
    pub fn maximal_transition(&self) -> Result<Transition, Error> {
        if self.is_identity() {
            return Err(Error::SizeMismatch(
                "maximal transition is undefined for the identity".into(),
            ));
        }
        let n = self.n();
        let alpha = (1..=n)
            .rev()
            .find(|&a| (a + 1..=n).any(|b| self.apply(a) > self.apply(b)))
            .expect("non-identity permutation has an inversion");
        let beta = (alpha + 1..=n)
            .rev()
            .find(|&b| self.apply(alpha) > self.apply(b))
            .expect("alpha was chosen to admit a beta");
        let wb = self.apply(beta);
        let v = self.times_transposition(alpha, beta);
        let mut gammas = Vec::new();
        for g in 1..alpha {
            if self.apply(g) >= wb {
                continue;
            }
            let clear = (g + 1..alpha)
                .all(|i| self.apply(i) < self.apply(g) || self.apply(i) > wb);
            if clear {
                gammas.push(g);
            }
        }
        let psis = gammas.iter().map(|&g| v.times_transposition(g, alpha)).collect();
        Ok(Transition { alpha, beta, v, gammas, psis })
    }

    /// Embeds `Sigma_n` into `Sigma_{n+m}` by fixing `n+1, ..., n+m`.
    pub fn pad(&self, m: usize) -> Permutation {
        let n = self.n();
        let mut word = self.word.clone();
        word.extend(n + 1..=n + m);
        Self::from_word_unchecked(word)
    }

    /// All permutations of `{1, ..., n}` in lexicographic word order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self::from_word_unchecked(word.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| word[i] < word[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }

    /// Positions `i` with `w(i) < w(i+1)`, i.e. `l(w s_i) = l(w) + 1`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.apply(i) < self.apply(i + 1)).collect()
    }

    /// A reduced word `s_{i_1} ... s_{i_l}` for `w`, built by repeatedly
    /// stripping a descent from the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while !p.is_identity() {
            let i = (1..p.n()).find(|&i| p.apply(i) > p.apply(i + 1)).unwrap();
            p = p.times_transposition(i, i + 1);
            rev.push(i);
        }
        rev.reverse();
        rev
    }
}

/// The data of a maximal transition
/// `S_w = S_v (x_alpha - y_{w(beta)}) + sum_t S_{psi_t}`.
#[derive(Clone, Debug)]
pub struct Transition {
    pub alpha: usize,
    pub beta: usize,
    pub v: Permutation,
    pub gammas: Vec<usize>,
    pub psis: Vec<Permutation>,
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for Permutation {}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.cmp(&other.word)
    }
}

impl std::hash::Hash for Permutation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    /// Comma-free digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::ParsePermutation("empty input".into()));
        }
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::ParsePermutation(format!("bad entry {t:?}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::ParsePermutation(format!("bad character {c:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_word(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Independent oracle: count inversions directly from the word.
    fn brute_length(w: &Permutation) -> usize {
        let n = w.n();
        let mut count = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if w.apply(i) > w.apply(j) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn length_examples() {
        assert_eq!(p("35142").length(), 6);
        assert_eq!(Permutation::identity(7).length(), 0);
        assert_eq!(p("4321").length(), 6);
        for w in Permutation::all(4) {
            assert_eq!(w.length(), brute_length(&w));
            assert_eq!(w.length(), w.diagram().len());
        }
    }

    #[test]
    fn rank_function_examples() {
        let w = p("2413");
        assert_eq!(w.rank_function(2, 3), 1);
        assert_eq!(w.rank_function(2, 1), 0);
        for q in 1..=4 {
            assert_eq!(w.rank_function(4, q), q);
        }
        // r_{w^{-1}}(q, p) = r_w(p, q)
        let wi = w.inverse();
        for pp in 1..=4 {
            for q in 1..=4 {
                assert_eq!(w.rank_function(pp, q), wi.rank_function(q, pp));
            }
        }
    }

    #[test]
    fn diagram_examples() {
        let cells: Vec<_> = p("35142").diagram().cells().to_vec();
        assert_eq!(cells, vec![(1, 1), (1, 2), (2, 1), (2, 2), (2, 4), (4, 2)]);
        assert!(Permutation::identity(5).diagram().is_empty());
        assert_eq!(p("1423").diagram().cells(), &[(2, 2), (2, 3)]);
        assert_eq!(p("2413").diagram().cells(), &[(1, 1), (2, 1), (2, 3)]);
    }

    #[test]
    fn diagram_right_action_recursion() {
        // D(w s_i) = D(w) s_i  u  {(i, w(i))} whenever l(w s_i) = l(w) + 1,
        // where the right action swaps rows i and i+1 of the cell set.
        for w in Permutation::all(4) {
            for i in 1..4 {
                if w.apply(i) < w.apply(i + 1) {
                    let ws = w.times_transposition(i, i + 1);
                    let mut expected: Vec<(usize, usize)> = w
                        .diagram()
                        .cells()
                        .iter()
                        .map(|&(r, c)| {
                            let r2 = if r == i { i + 1 } else if r == i + 1 { i } else { r };
                            (r2, c)
                        })
                        .collect();
                    expected.push((i, w.apply(i)));
                    expected.sort();
                    assert_eq!(ws.diagram().cells(), &expected[..], "w={w} i={i}");
                }
            }
        }
    }

    #[test]
    fn strong_order_examples() {
        let id = Permutation::identity(4);
        for w in Permutation::all(4) {
            assert!(id.strong_leq(&w));
        }
        assert!(p("1324").strong_leq(&p("1423")));
        assert!(!p("4321").strong_leq(&p("1234")));
    }

    #[test]
    fn strong_order_inverse_symmetry() {
        let all = Permutation::all(4);
        for u in &all {
            for w in &all {
                assert_eq!(
                    u.strong_leq(w),
                    u.inverse().strong_leq(&w.inverse()),
                    "u={u} w={w}"
                );
            }
        }
    }

    #[test]
    fn weak_order_examples() {
        let w = p("321");
        assert!(w.weak_leq(&w));
        assert!(p("213").weak_leq(&w)); // s_1 is a suffix of 321
        assert!(!p("132").weak_leq(&p("213"))); // distinct length-1 elements
    }

    #[test]
    fn weak_implies_strong() {
        let all = Permutation::all(4);
        for u in &all {
            for w in &all {
                if u.weak_leq(w) {
                    assert!(u.strong_leq(w), "u={u} w={w}");
                }
            }
        }
    }

    #[test]
    fn weak_order_ideal_examples() {
        let id = Permutation::identity(3);
        assert_eq!(id.weak_order_ideal(), vec![id.clone()]);
        let s1 = p("213");
        assert_eq!(s1.weak_order_ideal(), vec![Permutation::identity(3), s1.clone()]);
        let ideal = p("321").weak_order_ideal();
        assert_eq!(ideal.len(), 6);
        for pair in ideal.windows(2) {
            assert!(pair[0].length() <= pair[1].length());
        }
    }

    #[test]
    fn border_cell_examples() {
        // (i, j) in D(w) is a border cell iff w(i+1) = j.
        assert_eq!(p("1423").border_cells(), vec![(2, 2)]);
        assert!(Permutation::identity(4).border_cells().is_empty());
        assert_eq!(p("321").border_cells(), vec![(1, 2), (2, 1)]);
        // removing a border cell and swapping rows yields D(w s_i)
        for w in Permutation::all(4) {
            for (i, j) in w.border_cells() {
                let ws = w.times_transposition(i, i + 1);
                let mut remaining: Vec<(usize, usize)> = w
                    .diagram()
                    .cells()
                    .iter()
                    .copied()
                    .filter(|&c| c != (i, j))
                    .map(|(r, c)| {
                        let r2 = if r == i { i + 1 } else if r == i + 1 { i } else { r };
                        (r2, c)
                    })
                    .collect();
                remaining.sort();
                assert_eq!(ws.diagram().cells(), &remaining[..]);
            }
        }
    }

    #[test]
    fn southeast_corner_examples() {
        assert_eq!(p("2413").southeast_corners(), vec![(2, 1), (2, 3)]);
        assert!(Permutation::identity(4).southeast_corners().is_empty());
        assert_eq!(p("1423").southeast_corners(), vec![(2, 3)]);
    }

    #[test]
    fn maximal_transition_simple() {
        for n in 2..=4 {
            for i in 1..n {
                let t = Permutation::simple(i, n).maximal_transition().unwrap();
                assert_eq!((t.alpha, t.beta), (i, i + 1));
                assert!(t.v.is_identity());
                if i == 1 {
                    assert!(t.gammas.is_empty());
                } else {
                    assert_eq!(t.gammas, vec![i - 1]);
                    assert_eq!(t.psis, vec![Permutation::simple(i - 1, n)]);
                }
            }
        }
    }

    #[test]
    fn maximal_transition_321() {
        let t = p("321").maximal_transition().unwrap();
        assert_eq!((t.alpha, t.beta), (2, 3));
        assert_eq!(t.v, p("312"));
        assert!(t.gammas.is_empty());
    }

    #[test]
    fn index_examples() {
        assert_eq!(Permutation::identity(5).index(), 0);
        assert_eq!(p("321").index(), 1);
        for w in Permutation::all(4) {
            if w.is_identity() {
                continue;
            }
            let t = w.maximal_transition().unwrap();
            for psi in &t.psis {
                assert!(psi.index() < w.index(), "w={w} psi={psi}");
            }
        }
    }

    #[test]
    fn pad_fixes_tail() {
        let w = p("321").pad(2);
        assert_eq!(w.word(), &[3, 2, 1, 4, 5]);
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn text_round_trip() {
        for w in Permutation::all(4) {
            let s = w.to_string();
            assert_eq!(s.parse::<Permutation>().unwrap(), w);
        }
        let big = Permutation::from_word(vec![10, 3, 1, 2, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!(big.to_string(), "10,3,1,2,4,5,6,7,8,9");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("350".parse::<Permutation>().is_err());
        assert!("1223".parse::<Permutation>().is_err());
    }

    #[test]
    fn reduced_word_is_reduced() {
        for w in Permutation::all(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut q = Permutation::identity(5);
            for &i in &word {
                q = q.compose(&Permutation::simple(i, 5));
            }
            assert_eq!(q, w);
        }
    }
}
