//! Parabolic subgroups `W^p`, longest elements `w_0^p`, longest/shortest
//! coset representatives, the sets `X_long`/`X_short`, and the special-element
//! test.
//!
//! Cosets of the subgroup acting on the left (`W_J·w`) are the default
//! throughout the extension formulas; the singular-block computations use the
//! opposite side (`w·W_J`), so coset operations carry an explicit side.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A set of simple-reflection indices inside `S_n`; may be empty (trivial
/// parabolic) or full (the whole group).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    simples: BTreeSet<usize>,
    n: usize,
}

impl ParabolicSubset {
    pub fn new(n: usize, simples: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParabolic("ambient rank 0".into()));
        }
        let simples: BTreeSet<usize> = simples.into_iter().collect();
        if let Some(&bad) = simples.iter().find(|&&i| i < 1 || i >= n) {
            return Err(Error::InvalidParabolic(format!(
                "index {bad} out of range 1..{n}"
            )));
        }
        Ok(Self { simples, n })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Parses a comma-separated index list; the empty string is the trivial
    /// parabolic.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        if s.trim().is_empty() {
            return Self::empty(n);
        }
        let indices: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParabolic(format!("bad index {t:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        Self::new(n, indices)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn simples(&self) -> impl Iterator<Item = usize> + '_ {
        self.simples.iter().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.simples.contains(&i)
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    /// `rank(W^J)` = number of simple generators.
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    /// Maximal runs of consecutive indices; each run `[a..=b]` generates the
    /// symmetric group of the block `{a..b+1}`.
    fn segments(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &i in &self.simples {
            match out.last_mut() {
                Some((_, b)) if *b + 1 == i => *b = i,
                _ => out.push((i, i)),
            }
        }
        out
    }

    /// `|W^J|` as a product of factorials of block sizes.
    pub fn subgroup_order(&self) -> u64 {
        self.segments()
            .iter()
            .map(|&(a, b)| (1..=(b - a + 2) as u64).product::<u64>())
            .product()
    }
}

impl std::fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rendered: Vec<String> = self.simples.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", rendered.join(","))
    }
}

/// Which coset of the subgroup a representative is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetSide {
    /// `W_J · w`
    LeftCosetOfSubgroup,
    /// `w · W_J`
    RightCosetOfSubgroup,
}

type SubgroupKey = (usize, Vec<usize>);

static SUBGROUPS: LazyLock<Mutex<HashMap<SubgroupKey, Arc<Vec<Permutation>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// All elements of the parabolic subgroup generated by `J`, in the global
/// deterministic order. Guarded at ambient rank 8.
pub fn subgroup_elements(j: &ParabolicSubset) -> Result<Arc<Vec<Permutation>>> {
    let n = j.n();
    if n > 8 {
        return Err(Error::RankGuard { n, max: 8 });
    }
    let key = (n, j.simples().collect::<Vec<_>>());
    let mut cache = SUBGROUPS.lock().unwrap();
    if let Some(elems) = cache.get(&key) {
        return Ok(Arc::clone(elems));
    }
    let generators: Vec<Permutation> = j
        .simples()
        .map(|i| Permutation::simple(i, n))
        .collect::<Result<_>>()?;
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = vec![Permutation::identity(n)?];
    seen.insert(queue[0].clone());
    while let Some(w) = queue.pop() {
        for g in &generators {
            let next = w.compose(g);
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut elems: Vec<Permutation> = seen.into_iter().collect();
    elems.sort();
    debug_assert_eq!(elems.len() as u64, j.subgroup_order());
    let elems = Arc::new(elems);
    cache.insert(key, Arc::clone(&elems));
    Ok(elems)
}

/// The longest element `w_0^J`: reverses each block of consecutive indices.
pub fn longest_in_parabolic(j: &ParabolicSubset) -> Permutation {
    let mut entries: Vec<usize> = (1..=j.n()).collect();
    for (a, b) in j.segments() {
        entries[a - 1..=b].reverse();
    }
    Permutation::from_one_line(&entries).expect("block reversal is a bijection")
}

/// Longest representatives of the cosets `W_J \ W`: all `w` with
/// `J ⊆ left_descents(w)`, in the global deterministic order.
pub fn x_long(j: &ParabolicSubset) -> Vec<Permutation> {
    Permutation::all(j.n())
        .into_iter()
        .filter(|w| j.simples().all(|i| w.has_left_descent(i)))
        .collect()
}

/// Shortest representatives of the cosets `W_J \ W`: all `w` whose left
/// descents avoid `J`.
pub fn x_short(j: &ParabolicSubset) -> Vec<Permutation> {
    Permutation::all(j.n())
        .into_iter()
        .filter(|w| j.simples().all(|i| !w.has_left_descent(i)))
        .collect()
}

fn step(w: &Permutation, i: usize, side: CosetSide) -> Permutation {
    let s = Permutation::simple(i, w.n()).expect("validated index");
    match side {
        CosetSide::LeftCosetOfSubgroup => s.compose(w),
        CosetSide::RightCosetOfSubgroup => w.compose(&s),
    }
}

fn has_descent(w: &Permutation, i: usize, side: CosetSide) -> bool {
    match side {
        CosetSide::LeftCosetOfSubgroup => w.has_left_descent(i),
        CosetSide::RightCosetOfSubgroup => w.has_right_descent(i),
    }
}

/// The unique shortest element of `W_J·w` or `w·W_J`, reached by stripping
/// descents from `J` one letter at a time.
pub fn coset_short_rep(w: &Permutation, j: &ParabolicSubset, side: CosetSide) -> Permutation {
    assert_eq!(w.n(), j.n(), "rank mismatch between element and parabolic");
    let mut cur = w.clone();
    while let Some(i) = j.simples().find(|&i| has_descent(&cur, i, side)) {
        cur = step(&cur, i, side);
    }
    cur
}

/// The unique longest element of `W_J·w` or `w·W_J`.
pub fn coset_long_rep(w: &Permutation, j: &ParabolicSubset, side: CosetSide) -> Permutation {
    assert_eq!(w.n(), j.n(), "rank mismatch between element and parabolic");
    let mut cur = w.clone();
    while let Some(i) = j.simples().find(|&i| !has_descent(&cur, i, side)) {
        cur = step(&cur, i, side);
    }
    cur
}

/// Tests whether `y` is special for `P`: whether `y^{-1} W^P y` is again a
/// parabolic subgroup `W^J̃` (so that `W^P y = y W^J̃`). Returns the subset
/// `J̃` when it is.
pub fn is_special(y: &Permutation, p: &ParabolicSubset) -> Result<Option<ParabolicSubset>> {
    if y.n() != p.n() {
        return Err(Error::RankMismatch(y.n(), p.n()));
    }
    let n = y.n();
    let y_inv = y.inverse();
    let conjugated: HashSet<Permutation> = subgroup_elements(p)?
        .iter()
        .map(|u| y_inv.compose(u).compose(y))
        .collect();
    let candidate = ParabolicSubset::new(
        n,
        (1..n).filter(|&i| conjugated.contains(&Permutation::simple(i, n).expect("in range"))),
    )?;
    let candidate_elems = subgroup_elements(&candidate)?;
    if candidate_elems.len() == conjugated.len()
        && candidate_elems.iter().all(|u| conjugated.contains(u))
    {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sub(n: usize, simples: &[usize]) -> ParabolicSubset {
        ParabolicSubset::new(n, simples.iter().copied()).unwrap()
    }

    #[test]
    fn subgroup_fixtures() {
        assert_eq!(
            subgroup_elements(&sub(3, &[])).unwrap().as_slice(),
            &[Permutation::identity(3).unwrap()]
        );
        assert_eq!(
            subgroup_elements(&sub(3, &[1])).unwrap().as_slice(),
            &[p("1,2,3"), p("2,1,3")]
        );
        assert_eq!(subgroup_elements(&sub(3, &[1, 2])).unwrap().len(), 6);
        assert_eq!(sub(5, &[1, 3, 4]).subgroup_order(), 2 * 6);
        assert!(subgroup_elements(&sub(9, &[1])).is_err());
    }

    #[test]
    fn longest_in_parabolic_fixtures() {
        assert_eq!(
            longest_in_parabolic(&sub(3, &[])),
            Permutation::identity(3).unwrap()
        );
        assert_eq!(longest_in_parabolic(&sub(3, &[1])), p("2,1,3"));
        assert_eq!(longest_in_parabolic(&sub(4, &[1, 2])), p("3,2,1,4"));
        for n in 2..=6 {
            for simples in 0u32..(1 << (n - 1)) {
                let j = sub(n, &(1..n).filter(|i| simples & (1 << (i - 1)) != 0).collect::<Vec<_>>());
                let by_scan = subgroup_elements(&j)
                    .unwrap()
                    .iter()
                    .max_by_key(|w| w.length())
                    .unwrap()
                    .clone();
                assert_eq!(longest_in_parabolic(&j), by_scan, "J={j} n={n}");
            }
        }
    }

    #[test]
    fn x_long_x_short_sl3() {
        let j = sub(3, &[1]);
        assert_eq!(x_long(&j), vec![p("2,1,3"), p("2,3,1"), p("3,2,1")]);
        assert_eq!(x_short(&j), vec![p("1,2,3"), p("1,3,2"), p("3,1,2")]);
        let trivial = sub(3, &[]);
        assert_eq!(x_long(&trivial).len(), 6);
        assert_eq!(x_long(&trivial), x_short(&trivial));
    }

    #[test]
    fn coset_counts() {
        for n in 2..=5 {
            for mask in 0u32..(1 << (n - 1)) {
                let j = sub(n, &(1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect::<Vec<_>>());
                let order: u64 = j.subgroup_order();
                let total: u64 = (1..=n as u64).product();
                assert_eq!(x_long(&j).len() as u64, total / order, "J={j}");
                assert_eq!(x_short(&j).len() as u64, total / order, "J={j}");
            }
        }
    }

    #[test]
    fn coset_reps() {
        let j = sub(3, &[1]);
        let s = p("2,1,3");
        assert_eq!(
            coset_short_rep(&s, &ParabolicSubset::empty(3).unwrap(), CosetSide::LeftCosetOfSubgroup),
            s
        );
        assert_eq!(
            coset_short_rep(&s, &j, CosetSide::LeftCosetOfSubgroup),
            Permutation::identity(3).unwrap()
        );
        let w0 = Permutation::longest_element(4).unwrap();
        for mask in 0u32..8 {
            let j = sub(4, &(1..4).filter(|i| mask & (1 << (i - 1)) != 0).collect::<Vec<_>>());
            assert_eq!(coset_long_rep(&w0, &j, CosetSide::RightCosetOfSubgroup), w0);
            assert_eq!(coset_long_rep(&w0, &j, CosetSide::LeftCosetOfSubgroup), w0);
        }
        // Long and short representatives of w·W_J differ by w_0^J on the right.
        let j = sub(4, &[2, 3]);
        for w in Permutation::all(4) {
            let short = coset_short_rep(&w, &j, CosetSide::RightCosetOfSubgroup);
            let long = coset_long_rep(&w, &j, CosetSide::RightCosetOfSubgroup);
            assert_eq!(short.compose(&longest_in_parabolic(&j)), long);
            assert_eq!(short.length() + longest_in_parabolic(&j).length(), long.length());
        }
    }

    #[test]
    fn special_fixtures() {
        let pset = sub(3, &[1]);
        assert_eq!(is_special(&p("2,1,3"), &pset).unwrap(), Some(sub(3, &[1])));
        assert_eq!(is_special(&p("2,3,1"), &pset).unwrap(), None);
        for n in 3..=5 {
            let w0 = Permutation::longest_element(n).unwrap();
            for mask in 0u32..(1 << (n - 1)) {
                let pp = sub(n, &(1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect::<Vec<_>>());
                let tilde = is_special(&w0, &pp).unwrap().expect("w0 is always special");
                let relabeled = sub(n, &pp.simples().map(|i| n - i).collect::<Vec<_>>());
                assert_eq!(tilde, relabeled);
            }
        }
    }

    #[test]
    fn special_preserves_order() {
        for n in 2..=5 {
            for mask in 0u32..(1 << (n - 1)) {
                let pp = sub(n, &(1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect::<Vec<_>>());
                for y in Permutation::all(n) {
                    if let Some(tilde) = is_special(&y, &pp).unwrap() {
                        assert_eq!(tilde.subgroup_order(), pp.subgroup_order());
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_validate() {
        assert!(ParabolicSubset::parse("", 4).unwrap().is_empty());
        assert_eq!(ParabolicSubset::parse("1,3", 4).unwrap(), sub(4, &[1, 3]));
        assert!(ParabolicSubset::parse("4", 4).is_err());
        assert!(ParabolicSubset::parse("0", 4).is_err());
        assert!(ParabolicSubset::parse("x", 4).is_err());
    }
}
