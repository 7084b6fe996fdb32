//! Robinson–Schensted correspondence, cell equivalences, the small and
//! penultimate two-sided cells, the elements `w_{s,t}`, and the map `Phi`
//! from bigrassmannians to the penultimate cell.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use crate::base::{coord_of, BigrassCoord};
use crate::error::{Error, Result};
use crate::perm::{Permutation, SimpleReflection};

/// A partition of `n`, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The hook `(2, 1^{n-2})`, the shape of the penultimate cell.
    pub fn hook(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall { n, min: 3 });
        }
        let mut parts = vec![1; n - 1];
        parts[0] = 2;
        Shape::new(parts)
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rendered: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", rendered.join(","))
    }
}

impl std::str::FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidShape(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        Shape::new(parts)
    }
}

/// A standard Young tableau: rows strictly increase left to right, columns
/// strictly increase top to bottom, entries are exactly `1..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape {
            parts: self.rows.iter().map(|r| r.len()).collect(),
        }
    }
}

/// Row insertion of the one-line word of `w`. Returns the insertion tableau
/// `P` and the recording tableau `Q`, always of equal shape.
pub fn rsk(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for step in 1..=w.n() {
        let mut value = w.image(step);
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![value]);
                q.push(vec![step]);
                break;
            }
            match p[row].iter().position(|&x| x > value) {
                None => {
                    p[row].push(value);
                    q[row].push(step);
                    break;
                }
                Some(col) => {
                    std::mem::swap(&mut p[row][col], &mut value);
                    row += 1;
                }
            }
        }
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

/// Shape of `rsk(w)`.
pub fn shape(w: &Permutation) -> Shape {
    rsk(w).0.shape()
}

fn assert_same_rank(x: &Permutation, y: &Permutation) {
    assert_eq!(
        x.n(),
        y.n(),
        "rank mismatch in cell comparison: {} vs {}",
        x.n(),
        y.n()
    );
}

/// `x ~_L y` iff the recording tableaux agree.
pub fn same_left_cell(x: &Permutation, y: &Permutation) -> bool {
    assert_same_rank(x, y);
    rsk(x).1 == rsk(y).1
}

/// `x ~_R y` iff the insertion tableaux agree.
pub fn same_right_cell(x: &Permutation, y: &Permutation) -> bool {
    assert_same_rank(x, y);
    rsk(x).0 == rsk(y).0
}

/// `x ~_J y` iff the shapes agree.
pub fn same_two_sided_cell(x: &Permutation, y: &Permutation) -> bool {
    assert_same_rank(x, y);
    shape(x) == shape(y)
}

pub(crate) struct CellTable {
    pub small: Vec<Permutation>,
    pub penultimate: Vec<Permutation>,
    pub penultimate_set: std::collections::HashSet<Permutation>,
    /// `(s, t)` ascent pair -> the element `w_{s,t}` of the penultimate cell.
    pub wst: HashMap<(usize, usize), Permutation>,
}

static CELLS: LazyLock<Mutex<HashMap<usize, Arc<CellTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

pub(crate) fn cell_table(n: usize) -> Result<Arc<CellTable>> {
    // In rank 2 the small/penultimate cells do not exist as separate cells.
    if n < 3 {
        return Err(Error::RankTooSmall { n, min: 3 });
    }
    let mut cache = CELLS.lock().unwrap();
    if let Some(t) = cache.get(&n) {
        return Ok(Arc::clone(t));
    }
    let all = Permutation::all(n);
    let small_shape = shape(&Permutation::simple(1, n)?);
    let small: Vec<Permutation> = all
        .iter()
        .filter(|w| shape(w) == small_shape)
        .cloned()
        .collect();
    let w0 = Permutation::longest_element(n)?;
    let mut penultimate: Vec<Permutation> = small.iter().map(|u| w0.compose(u)).collect();
    penultimate.sort();
    // Cross-check against the hook-shape class; a mismatch would invalidate
    // every formula downstream, so abort loudly.
    let hook = Shape::hook(n)?;
    let hook_class: Vec<Permutation> = all
        .iter()
        .filter(|w| shape(w) == hook)
        .cloned()
        .collect();
    assert_eq!(
        penultimate, hook_class,
        "penultimate cell differs from the hook-shape class at n={n}"
    );
    assert_eq!(
        penultimate.len(),
        (n - 1) * (n - 1),
        "penultimate cell size at n={n}"
    );
    let mut wst = HashMap::new();
    for x in &penultimate {
        let left_ascents: Vec<usize> =
            (1..n).filter(|&i| !x.has_left_descent(i)).collect();
        let right_ascents: Vec<usize> =
            (1..n).filter(|&i| !x.has_right_descent(i)).collect();
        assert!(
            left_ascents.len() == 1 && right_ascents.len() == 1,
            "penultimate element {x} does not have unique ascents"
        );
        let prev = wst.insert((left_ascents[0], right_ascents[0]), x.clone());
        assert!(
            prev.is_none(),
            "ascent pair ({}, {}) is not unique in the penultimate cell",
            left_ascents[0],
            right_ascents[0]
        );
    }
    assert_eq!(wst.len(), (n - 1) * (n - 1));
    let table = Arc::new(CellTable {
        penultimate_set: penultimate.iter().cloned().collect(),
        small,
        penultimate,
        wst,
    });
    cache.insert(n, Arc::clone(&table));
    Ok(table)
}

/// The two-sided cell of the simple reflections, for `n >= 3`.
pub fn small_cell(n: usize) -> Result<Vec<Permutation>> {
    Ok(cell_table(n)?.small.clone())
}

/// The penultimate two-sided cell `J = w0 · small_cell(n)`, of size
/// `(n-1)^2`, for `n >= 3`.
pub fn penultimate_cell(n: usize) -> Result<Vec<Permutation>> {
    Ok(cell_table(n)?.penultimate.clone())
}

pub(crate) fn in_penultimate_cell(w: &Permutation) -> Result<bool> {
    Ok(cell_table(w.n())?.penultimate_set.contains(w))
}

/// The unique element of the penultimate cell whose unique left ascent is
/// `s` and unique right ascent is `t`.
pub fn w_st(s: SimpleReflection, t: SimpleReflection, n: usize) -> Result<Permutation> {
    let table = cell_table(n)?;
    for &i in &[s.index(), t.index()] {
        if i < 1 || i >= n {
            return Err(Error::SimpleOutOfRange { index: i, n });
        }
    }
    Ok(table
        .wst
        .get(&(s.index(), t.index()))
        .expect("ascent-indexed bijection verified at construction")
        .clone())
}

/// `Phi`: sends a bigrassmannian with left descent `s` and right descent `t`
/// to `w_{s,t}`.
pub fn phi(b: &Permutation) -> Result<Permutation> {
    Ok(phi_with_coord(b)?.0)
}

pub(crate) fn phi_with_coord(b: &Permutation) -> Result<(Permutation, BigrassCoord)> {
    let c = coord_of(b)?;
    let image = w_st(SimpleReflection(c.i), SimpleReflection(c.j), b.n())?;
    Ok((image, c))
}
