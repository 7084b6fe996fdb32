//! The base `B` of join-irreducible (= bigrassmannian) permutations, its
//! `(i,j,k)` coordinate system, the sets `BM(w)` and `sBMt(w)`, and Bruhat
//! joins.
//!
//! Bigrassmannians are enumerated by exhaustive descent-set scan; the per-rank
//! tables are computed once and cached behind a lock.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::perm::{bruhat_leq, Permutation, SimpleReflection};

/// Coordinates of a bigrassmannian permutation: `i` is the unique left
/// descent, `j` the unique right descent, and `k` the position in the Bruhat
/// chain of all bigrassmannians with descents `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigrassCoord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

pub(crate) struct BaseTable {
    /// All bigrassmannians in the global deterministic order.
    pub elements: Vec<Permutation>,
    pub coords: HashMap<Permutation, BigrassCoord>,
    /// `chains[(i,j)]` is `iB_j` sorted increasingly along the Bruhat order.
    pub chains: HashMap<(usize, usize), Vec<Permutation>>,
}

static BASE: LazyLock<Mutex<HashMap<usize, Arc<BaseTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn unique_descent(
    set: &std::collections::BTreeSet<SimpleReflection>,
) -> Option<usize> {
    if set.len() == 1 {
        set.iter().next().map(|s| s.index())
    } else {
        None
    }
}

pub(crate) fn base_table(n: usize) -> Result<Arc<BaseTable>> {
    if n < 2 {
        return Err(Error::RankTooSmall { n, min: 2 });
    }
    let mut cache = BASE.lock().unwrap();
    if let Some(t) = cache.get(&n) {
        return Ok(Arc::clone(t));
    }
    let mut elements = Vec::new();
    let mut by_descents: HashMap<(usize, usize), Vec<Permutation>> = HashMap::new();
    for w in Permutation::all(n) {
        let (Some(i), Some(j)) = (
            unique_descent(&w.left_descents()),
            unique_descent(&w.right_descents()),
        ) else {
            continue;
        };
        by_descents.entry((i, j)).or_default().push(w.clone());
        elements.push(w);
    }
    let mut coords = HashMap::new();
    let mut chains = HashMap::new();
    for ((i, j), mut chain) in by_descents {
        // A Bruhat chain has pairwise distinct lengths, so the global order
        // sorts it; comparability of neighbours is verified outright.
        chain.sort();
        for pair in chain.windows(2) {
            assert!(
                bruhat_leq(&pair[0], &pair[1]),
                "iB_j is not a chain at n={n}, (i,j)=({i},{j}): {} vs {}",
                pair[0],
                pair[1]
            );
        }
        for (k, b) in chain.iter().enumerate() {
            coords.insert(b.clone(), BigrassCoord { i, j, k });
        }
        chains.insert((i, j), chain);
    }
    let table = Arc::new(BaseTable {
        elements,
        coords,
        chains,
    });
    cache.insert(n, Arc::clone(&table));
    Ok(table)
}

/// All bigrassmannians of `S_n` (exactly one left and one right descent), in
/// the global deterministic order. Requires `n >= 2`.
pub fn bigrassmannians(n: usize) -> Result<Vec<Permutation>> {
    Ok(base_table(n)?.elements.clone())
}

pub fn is_bigrassmannian(w: &Permutation) -> bool {
    w.left_descents().len() == 1 && w.right_descents().len() == 1
}

/// Coordinates `(i, j, k)` of a bigrassmannian permutation.
pub fn coord_of(b: &Permutation) -> Result<BigrassCoord> {
    if !is_bigrassmannian(b) {
        return Err(Error::NotBigrassmannian(b.to_string()));
    }
    let table = base_table(b.n())?;
    Ok(*table.coords.get(b).expect("bigrassmannian missing from table"))
}

/// The bigrassmannian of `S_n` with coordinates `c`.
pub fn element_of(c: BigrassCoord, n: usize) -> Result<Permutation> {
    let table = base_table(n)?;
    table
        .chains
        .get(&(c.i, c.j))
        .and_then(|chain| chain.get(c.k))
        .cloned()
        .ok_or(Error::CoordOutOfRange {
            i: c.i,
            j: c.j,
            k: c.k,
            n,
        })
}

/// The chain `iB_j` in `S_n`, increasing along the Bruhat order.
pub fn chain(n: usize, i: usize, j: usize) -> Result<Vec<Permutation>> {
    if i < 1 || i >= n {
        return Err(Error::SimpleOutOfRange { index: i, n });
    }
    if j < 1 || j >= n {
        return Err(Error::SimpleOutOfRange { index: j, n });
    }
    Ok(base_table(n)?
        .chains
        .get(&(i, j))
        .cloned()
        .unwrap_or_default())
}

/// `BM(w)`: the Bruhat-maximal bigrassmannians below `w`, in the global
/// deterministic order. Empty exactly when `w` is the identity.
pub fn bm(w: &Permutation) -> Vec<Permutation> {
    let n = w.n();
    if n < 2 {
        return Vec::new();
    }
    let table = base_table(n).expect("n >= 2");
    let below: Vec<&Permutation> = table
        .elements
        .iter()
        .filter(|b| bruhat_leq(b, w))
        .collect();
    below
        .iter()
        .filter(|b| !below.iter().any(|c| *b != c && bruhat_leq(b, c)))
        .map(|b| (*b).clone())
        .collect()
}

/// `sBMt(w)`: the elements of `BM(w)` with left descent `s` and right
/// descent `t`. In type A this has at most one element; the invariant is
/// exercised by the test battery rather than assumed here.
pub fn bm_st(w: &Permutation, s: SimpleReflection, t: SimpleReflection) -> Vec<Permutation> {
    bm(w)
        .into_iter()
        .filter(|b| b.has_left_descent(s.index()) && b.has_right_descent(t.index()))
        .collect()
}

/// Bruhat join: the unique minimal common upper bound of `elems` in `S_n`,
/// or `None` when no unique minimum exists (the Bruhat order is not a
/// lattice). `join` of the empty set is the identity. Guarded at rank 7.
pub fn join(n: usize, elems: &[Permutation]) -> Result<Option<Permutation>> {
    if n > 7 {
        return Err(Error::RankGuard { n, max: 7 });
    }
    for e in elems {
        if e.n() != n {
            return Err(Error::RankMismatch(e.n(), n));
        }
    }
    if elems.is_empty() {
        return Ok(Some(Permutation::identity(n)?));
    }
    if elems.len() == 1 {
        return Ok(Some(elems[0].clone()));
    }
    let upper: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|w| elems.iter().all(|e| bruhat_leq(e, w)))
        .collect();
    // `upper` is sorted by (length, lex); a unique join must be the unique
    // shortest upper bound and lie below every other one.
    let min_len = upper[0].length();
    if upper.len() > 1 && upper[1].length() == min_len {
        return Ok(None);
    }
    let candidate = &upper[0];
    if upper.iter().skip(1).all(|u| bruhat_leq(candidate, u)) {
        Ok(Some(candidate.clone()))
    } else {
        Ok(None)
    }
}

/// Brute-force join-irreducibles of `S_n`: `w` is join-irreducible iff no
/// subset of its strict down-set has join `w`. Guarded at rank 5.
pub fn join_irreducibles(n: usize) -> Result<Vec<Permutation>> {
    if n > 5 {
        return Err(Error::RankGuard { n, max: 5 });
    }
    let all = Permutation::all(n);
    let m = all.len();
    let mut leq = vec![false; m * m];
    for (a, x) in all.iter().enumerate() {
        for (b, y) in all.iter().enumerate() {
            leq[a * m + b] = bruhat_leq(x, y);
        }
    }
    let mut out = Vec::new();
    for (wi, w) in all.iter().enumerate() {
        let down: Vec<usize> = (0..m).filter(|&u| u != wi && leq[u * m + wi]).collect();
        // A subset of the down-set joins to w iff the maximal elements of the
        // whole down-set do: any witness subset is dominated elementwise by
        // the maxima, and both then share w as least upper bound.
        let maxima: Vec<usize> = down
            .iter()
            .copied()
            .filter(|&u| !down.iter().any(|&v| v != u && leq[u * m + v]))
            .collect();
        let upper: Vec<usize> = (0..m)
            .filter(|&c| maxima.iter().all(|&u| leq[u * m + c]))
            .collect();
        // `all` is globally ordered, so upper[0] is a shortest upper bound;
        // it is the join exactly when it lies below every other one.
        let first = upper[0];
        let joins_to_w = first == wi && upper.iter().all(|&c| leq[first * m + c]);
        if !joins_to_w {
            out.push(w.clone());
        }
    }
    Ok(out)
}
