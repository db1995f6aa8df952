//! The super alphabet, labelings of permutation diagrams, balancedness,
//! balanced super labelings (BSLs), their monomials, duality, and the
//! marked/unmarked factorization.
//!
//! The alphabet is totally ordered as
//! `... < 3' < 2' < 1' < 1 < 2 < 3 < ...`: marked letters sit below all
//! unmarked letters and decrease with their index. A labeling of `D(w)`
//! assigns a letter to every diagram cell. A hook is *balanced* when
//! sorting its entries weakly increasingly from the far end of the arm,
//! through the corner, to the bottom of the leg leaves the corner entry
//! unchanged. A BSL is a balanced labeling that is column-strict in the
//! unmarked letters, row-strict in the marked letters, and satisfies the
//! flag conditions `j' <= T(i,j) <= i`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::perm::Permutation;
use crate::poly::SparsePoly;
use crate::Error;

/// A letter of the super alphabet. Internally a nonzero integer key:
/// `-k` is the marked letter `k'`, `+k` is the unmarked letter `k`. The
/// derived integer order *is* the alphabet order.
///
/// ```
/// use schubert::superlabel::SuperLetter;
///
/// let a = SuperLetter::marked(2);   // 2'
/// let b = SuperLetter::marked(1);   // 1'
/// let c = SuperLetter::unmarked(1); // 1
/// assert!(a < b && b < c);
/// assert_eq!(a.to_string(), "2'");
/// ```
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperLetter(i32);

impl SuperLetter {
    pub fn marked(k: usize) -> Self {
        assert!(k >= 1);
        SuperLetter(-(k as i32))
    }

    pub fn unmarked(k: usize) -> Self {
        assert!(k >= 1);
        SuperLetter(k as i32)
    }

    pub fn is_marked(&self) -> bool {
        self.0 < 0
    }

    /// The index `k` of `k` or `k'`.
    pub fn index(&self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// Swaps marked and unmarked at the same index.
    pub fn swapped(&self) -> Self {
        SuperLetter(-self.0)
    }
}

impl fmt::Display for SuperLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_marked() {
            write!(f, "{}'", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

impl fmt::Debug for SuperLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SuperLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (body, marked) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let k: usize = body
            .parse()
            .map_err(|_| Error::BadLabeling(format!("bad letter {s:?}")))?;
        if k == 0 {
            return Err(Error::BadLabeling("letter index must be positive".into()));
        }
        Ok(if marked { SuperLetter::marked(k) } else { SuperLetter::unmarked(k) })
    }
}

/// Content vector of a labeling: occurrence counts in ascending alphabet
/// order `(n', ..., 1', 1, ..., n)`, so prefix sums count letters `<= L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<u32>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; 2 * n])
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    fn slot(&self, letter: SuperLetter) -> usize {
        let n = self.n();
        if letter.is_marked() {
            n - letter.index()
        } else {
            n - 1 + letter.index()
        }
    }

    pub fn count(&self, letter: SuperLetter) -> u32 {
        self.0[self.slot(letter)]
    }

    pub fn add(&mut self, letter: SuperLetter) {
        let s = self.slot(letter);
        self.0[s] += 1;
    }

    pub fn remove(&mut self, letter: SuperLetter) {
        let s = self.slot(letter);
        assert!(self.0[s] > 0);
        self.0[s] -= 1;
    }

    /// Dominance order: `self <= other` iff every prefix sum of `self` is
    /// at most the matching prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Weight) -> bool {
        assert_eq!(self.0.len(), other.0.len());
        let mut a = 0i64;
        let mut b = 0i64;
        for (x, y) in self.0.iter().zip(&other.0) {
            a += *x as i64;
            b += *y as i64;
            if a > b {
                return false;
            }
        }
        true
    }
}

/// An assignment of super letters to the cells of `D(w)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling {
    w: Permutation,
    entries: BTreeMap<(usize, usize), SuperLetter>,
}

impl Labeling {
    /// Builds a labeling; the entry domain must be exactly the diagram of
    /// `w`.
    pub fn new(
        w: Permutation,
        entries: BTreeMap<(usize, usize), SuperLetter>,
    ) -> Result<Self, Error> {
        let cells: Vec<(usize, usize)> = entries.keys().copied().collect();
        if cells != w.diagram().cells() {
            return Err(Error::BadLabeling(format!(
                "entry domain does not match D({w})"
            )));
        }
        Ok(Labeling { w, entries })
    }

    /// The unique empty labeling of an empty diagram.
    pub fn empty(w: Permutation) -> Result<Self, Error> {
        if !w.diagram().is_empty() {
            return Err(Error::BadLabeling(format!("D({w}) is not empty")));
        }
        Ok(Labeling { w, entries: BTreeMap::new() })
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn get(&self, cell: (usize, usize)) -> SuperLetter {
        self.entries[&cell]
    }

    /// Cells with their letters in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), SuperLetter)> + '_ {
        self.entries.iter().map(|(&c, &l)| (c, l))
    }

    pub fn weight(&self) -> Weight {
        let mut wt = Weight::zero(self.w.n());
        for (_, l) in self.entries() {
            wt.add(l);
        }
        wt
    }

    /// Number of unmarked letters; for a BSL this is the homological degree
    /// and equals the length of the unmarked factor of its factorization.
    pub fn homological_degree(&self) -> usize {
        self.entries.values().filter(|l| !l.is_marked()).count()
    }

    /// True iff every hook of the diagram is balanced.
    pub fn is_balanced(&self) -> bool {
        self.w
            .diagram()
            .cells()
            .iter()
            .all(|&cell| self.hook_is_balanced(cell))
    }

    fn hook_is_balanced(&self, corner: (usize, usize)) -> bool {
        let (i, j) = corner;
        let arm: Vec<SuperLetter> = self
            .entries
            .iter()
            .filter(|(&(r, c), _)| r == i && c > j)
            .map(|(_, &l)| l)
            .collect();
        let leg: Vec<SuperLetter> = self
            .entries
            .iter()
            .filter(|(&(r, c), _)| c == j && r > i)
            .map(|(_, &l)| l)
            .collect();
        if arm.is_empty() && leg.is_empty() {
            return true;
        }
        // Sort the hook entries weakly increasingly along the path from the
        // far end of the arm through the corner to the bottom of the leg;
        // the corner then holds the (arm-length)-th smallest entry.
        let mut sorted: Vec<SuperLetter> = arm
            .iter()
            .chain(leg.iter())
            .copied()
            .chain(std::iter::once(self.get(corner)))
            .collect();
        sorted.sort();
        sorted[arm.len()] == self.get(corner)
    }

    /// True iff the labeling is balanced, column-strict in the unmarked
    /// letters, row-strict in the marked letters, and satisfies the flag
    /// conditions `j' <= T(i,j) <= i`.
    pub fn is_bsl(&self) -> bool {
        for (&(i, j), &l) in &self.entries {
            if l.is_marked() {
                if l.index() > j {
                    return false; // flag: T(i,j) >= j'
                }
            } else if l.index() > i {
                return false; // flag: T(i,j) <= i
            }
        }
        let n = self.w.n();
        for j in 1..=n {
            let mut seen = Vec::new();
            for (&(_, c), &l) in &self.entries {
                if c == j && !l.is_marked() {
                    if seen.contains(&l) {
                        return false; // column-strict in unmarked letters
                    }
                    seen.push(l);
                }
            }
        }
        for i in 1..=n {
            let mut seen = Vec::new();
            for (&(r, _), &l) in &self.entries {
                if r == i && l.is_marked() {
                    if seen.contains(&l) {
                        return false; // row-strict in marked letters
                    }
                    seen.push(l);
                }
            }
        }
        self.is_balanced()
    }

    /// The dual labeling of `D(w^{-1})`: transpose and swap `i <-> i'`.
    /// An involution that maps BSLs to BSLs.
    pub fn star(&self) -> Labeling {
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j), &l)| ((j, i), l.swapped()))
            .collect();
        Labeling { w: self.w.inverse(), entries }
    }

    /// Serializes as `{"w": "321", "entries": [[i, j, "1'"], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries()
            .map(|((i, j), l)| serde_json::json!([i, j, l.to_string()]))
            .collect();
        serde_json::json!({ "w": self.w.to_string(), "entries": entries })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let w: Permutation = v
            .get("w")
            .and_then(|x| x.as_str())
            .ok_or_else(|| Error::BadLabeling("missing \"w\"".into()))?
            .parse()?;
        let mut entries = BTreeMap::new();
        let list = v
            .get("entries")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::BadLabeling("missing \"entries\"".into()))?;
        for item in list {
            let triple = item
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| Error::BadLabeling("entry is not a triple".into()))?;
            let i = triple[0].as_u64().ok_or_else(|| Error::BadLabeling("bad row".into()))?;
            let j = triple[1].as_u64().ok_or_else(|| Error::BadLabeling("bad col".into()))?;
            let l: SuperLetter = triple[2]
                .as_str()
                .ok_or_else(|| Error::BadLabeling("bad letter".into()))?
                .parse()?;
            entries.insert((i as usize, j as usize), l);
        }
        Labeling::new(w, entries)
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling({} | ", self.w)?;
        let parts: Vec<String> = self
            .entries()
            .map(|((i, j), l)| format!("({i},{j})={l}"))
            .collect();
        write!(f, "{})", parts.join(" "))
    }
}

/// All BSLs of `D(w)`, enumerated by backtracking over cells in row-major
/// order with letters tried in alphabet order, so the output order is
/// deterministic. Hooks are checked as soon as their cell sets complete.
///
/// ```
/// use schubert::{perm::Permutation, superlabel::enumerate_bsl};
///
/// let w: Permutation = "321".parse().unwrap();
/// assert_eq!(enumerate_bsl(&w).len(), 8);
/// ```
pub fn enumerate_bsl(w: &Permutation) -> Vec<Labeling> {
    let cells: Vec<(usize, usize)> = w.diagram().cells().to_vec();
    if cells.is_empty() {
        return vec![Labeling { w: w.clone(), entries: BTreeMap::new() }];
    }
    // hook_checks[t] = corners whose hooks are fully labeled once cell t is
    let mut hook_checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); cells.len()];
    for &corner in &cells {
        let last = cells
            .iter()
            .enumerate()
            .filter(|(_, &(r, c))| {
                (r == corner.0 && c >= corner.1) || (c == corner.1 && r > corner.0)
            })
            .map(|(t, _)| t)
            .max()
            .unwrap();
        hook_checks[last].push(corner);
    }
    let mut out = Vec::new();
    let mut state = Search {
        w,
        cells: &cells,
        hook_checks: &hook_checks,
        partial: BTreeMap::new(),
    };
    state.run(0, &mut out);
    out
}

struct Search<'a> {
    w: &'a Permutation,
    cells: &'a [(usize, usize)],
    hook_checks: &'a [Vec<(usize, usize)>],
    partial: BTreeMap<(usize, usize), SuperLetter>,
}

impl Search<'_> {
    fn run(&mut self, t: usize, out: &mut Vec<Labeling>) {
        if t == self.cells.len() {
            out.push(Labeling { w: self.w.clone(), entries: self.partial.clone() });
            return;
        }
        let (i, j) = self.cells[t];
        // flag conditions bound the candidates: marked k' with k <= j, then
        // unmarked k with k <= i, tried in alphabet order
        let candidates: Vec<SuperLetter> = (1..=j)
            .rev()
            .map(SuperLetter::marked)
            .chain((1..=i).map(SuperLetter::unmarked))
            .collect();
        'next: for letter in candidates {
            if letter.is_marked() {
                // row-strict in marked letters
                for (&(r, _), &l) in self.partial.iter() {
                    if r == i && l == letter {
                        continue 'next;
                    }
                }
            } else {
                // column-strict in unmarked letters
                for (&(_, c), &l) in self.partial.iter() {
                    if c == j && l == letter {
                        continue 'next;
                    }
                }
            }
            self.partial.insert((i, j), letter);
            let probe = Labeling { w: self.w.clone(), entries: self.partial.clone() };
            if self.hook_checks[t].iter().all(|&corner| probe.hook_is_balanced(corner)) {
                self.run(t + 1, out);
            }
            self.partial.remove(&(i, j));
        }
    }
}

/// The monomial `m(T) = prod x_i^{f_T(i)} * prod (-y_i)^{f_T(i')}`.
pub fn monomial(t: &Labeling) -> SparsePoly {
    let n = t.w().n();
    let mut out = SparsePoly::one(n);
    let mut sign = BigInt::one();
    for (_, l) in t.entries() {
        if l.is_marked() {
            out = out * SparsePoly::var_y(l.index(), n);
            sign = -sign;
        } else {
            out = out * SparsePoly::var_x(l.index(), n);
        }
    }
    out * SparsePoly::constant(sign, n)
}

/// The BSL generating function `sum_T m(T)`; equal to the double Schubert
/// polynomial of `w`.
pub fn bsl_generating_function(w: &Permutation) -> SparsePoly {
    let mut out = SparsePoly::zero(w.n());
    for t in enumerate_bsl(w) {
        out = out + monomial(&t);
    }
    out
}

/// Result of factoring a BSL into its marked and unmarked parts.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// Marked-only BSL of `D(u)`.
    pub t_marked: Labeling,
    /// Unmarked-only BSL of `D(v)`.
    pub t_unmarked: Labeling,
    pub u: Permutation,
    pub v: Permutation,
}

/// Factors a BSL `T` of `D(w)` uniquely as `T = T_u v + u T_v` with
/// `w = u v`, `l(w) = l(u) + l(v)`, `T_u` marked-only and `T_v`
/// unmarked-only. Computed by repeatedly removing a border cell that
/// carries the largest unmarked label (smallest row first), which peels off
/// a reduced word for `v` from the right.
pub fn factor_bsl(t: &Labeling) -> Result<Factorization, Error> {
    if !t.is_bsl() {
        return Err(Error::NotBsl(format!("{t:?}")));
    }
    let w = t.w().clone();
    let mut current = t.entries.clone();
    let mut wc = w.clone();
    loop {
        let Some(&max_unmarked) = current.values().filter(|l| !l.is_marked()).max() else {
            break;
        };
        let border = wc.border_cells();
        let (i, j) = border
            .iter()
            .copied()
            .filter(|&cell| current.get(&cell) == Some(&max_unmarked))
            .min()
            .expect("a BSL always has its largest unmarked label in a border cell");
        current.remove(&(i, j));
        // right action by s_i: swap rows i and i+1
        current = current
            .into_iter()
            .map(|((r, c), l)| {
                let r2 = if r == i {
                    i + 1
                } else if r == i + 1 {
                    i
                } else {
                    r
                };
                ((r2, c), l)
            })
            .collect();
        wc = wc.times_transposition(i, i + 1);
    }
    let u = wc;
    let v = u.inverse().compose(&w);
    // The right action by v sends a cell (a, b) of T_u to (v^{-1}(a), b)
    // and the left action by u sends a cell (a, b) of T_v to (a, u(b)), so
    // the marked cell (i, j) of T lands in T_u at (v(i), j) and the
    // unmarked cell (i, j) lands in T_v at (i, u^{-1}(j)).
    let u_inv = u.inverse();
    let mut marked_entries = BTreeMap::new();
    let mut unmarked_entries = BTreeMap::new();
    for ((i, j), l) in t.entries() {
        if l.is_marked() {
            marked_entries.insert((v.apply(i), j), l);
        } else {
            unmarked_entries.insert((i, u_inv.apply(j)), l);
        }
    }
    let t_marked = Labeling::new(u.clone(), marked_entries)
        .map_err(|_| Error::NotBsl(format!("marked part of {t:?} does not fit D({u})")))?;
    let t_unmarked = Labeling::new(v.clone(), unmarked_entries)
        .map_err(|_| Error::NotBsl(format!("unmarked part of {t:?} does not fit D({v})")))?;
    debug_assert_eq!(current, t_marked.entries, "removal residue must equal the marked factor");
    Ok(Factorization { t_marked, t_unmarked, u, v })
}

/// Reassembles `T = T_u v + u T_v` from a factorization; inverse of
/// [`factor_bsl`].
pub fn reconstruct(f: &Factorization) -> Result<Labeling, Error> {
    let w = f.u.compose(&f.v);
    let v_inv = f.v.inverse();
    let mut entries = BTreeMap::new();
    for ((a, b), l) in f.t_marked.entries() {
        entries.insert((v_inv.apply(a), b), l);
    }
    for ((a, b), l) in f.t_unmarked.entries() {
        entries.insert((a, f.u.apply(b)), l);
    }
    Labeling::new(w, entries)
}
