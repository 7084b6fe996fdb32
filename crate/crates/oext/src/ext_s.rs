//! S-subcategory formulas: first extensions from simple objects to proper
//! standard objects (complete type-A answer) and to standard objects
//! (special columns only, plus the elementary vanishing cases).
//!
//! All structural objects are pure index data: a simple, proper standard or
//! standard object is a longest coset representative in `X_long`.

use std::collections::HashSet;

use crate::cells::in_penultimate_cell;
use crate::error::{Error, Result};
use crate::ext_o::{bm_phi_profile, GradedExtAnswer, Normalization, SocleEntry};
use crate::parabolic::{
    coset_long_rep, coset_short_rep, is_special, longest_in_parabolic, x_long, CosetSide,
    ParabolicSubset,
};
use crate::perm::{bruhat_leq, Permutation};

/// Ambient data of one S-subcategory: the parabolic `p`, its longest element
/// `w_0^p`, and the index set `X_long` of simples/(proper) standards.
#[derive(Debug, Clone)]
pub struct SCategoryContext {
    p: ParabolicSubset,
    w0: Permutation,
    w0p: Permutation,
    x_long: Vec<Permutation>,
    x_long_set: HashSet<Permutation>,
}

impl SCategoryContext {
    pub fn new(p: ParabolicSubset) -> Result<Self> {
        let n = p.n();
        if n < 3 {
            return Err(Error::RankTooSmall { n, min: 3 });
        }
        let x_long = x_long(&p);
        Ok(Self {
            w0: Permutation::longest_element(n)?,
            w0p: longest_in_parabolic(&p),
            x_long_set: x_long.iter().cloned().collect(),
            x_long,
            p,
        })
    }

    pub fn n(&self) -> usize {
        self.p.n()
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.p
    }

    pub fn w0p(&self) -> &Permutation {
        &self.w0p
    }

    /// The index set, in the global deterministic order.
    pub fn x_long(&self) -> &[Permutation] {
        &self.x_long
    }

    fn check_member(&self, w: &Permutation) -> Result<()> {
        if w.n() != self.n() {
            return Err(Error::RankMismatch(w.n(), self.n()));
        }
        if !self.x_long_set.contains(w) {
            return Err(Error::NotLongestRep {
                perm: w.to_string(),
                parabolic: self.p.to_string(),
            });
        }
        Ok(())
    }
}

/// `dim ext^1_S(L^p_x, Δ̄^p_y⟨i⟩)`.
///
/// For `x = w0` the answer is `c(w0·w0^p·y)`-dimensional in the single
/// degree `l(w0) - l(y) - 2`. Otherwise it is one-dimensional in degree
/// `m(b) - l(y)` when some `b ∈ BM(w0^p·y)` has `Phi(b) = x`, and zero
/// else. The BM set is taken at the short representative `w0^p·y`: the
/// socle reduction runs through `Δ_{w0^p y}`, and the rank-3 and rank-4
/// tables pin this reading.
pub fn ext1_simple_to_proper_standard(
    ctx: &SCategoryContext,
    x: &Permutation,
    y: &Permutation,
) -> Result<GradedExtAnswer> {
    ctx.check_member(x)?;
    ctx.check_member(y)?;
    let col = proper_standard_column(ctx, y)?;
    Ok(proper_standard_cell(ctx, x, &col))
}

/// Per-column data for proper-standard sweeps: the short representative
/// `w0^p·y` and its `Phi`-profile.
pub(crate) struct ProperStandardColumn {
    pub y: Permutation,
    pub short: Permutation,
    pub profile: std::collections::HashMap<Permutation, i64>,
}

pub(crate) fn proper_standard_column(
    ctx: &SCategoryContext,
    y: &Permutation,
) -> Result<ProperStandardColumn> {
    let short = ctx.w0p.compose(y);
    Ok(ProperStandardColumn {
        y: y.clone(),
        profile: bm_phi_profile(&short)?,
        short,
    })
}

pub(crate) fn proper_standard_cell(
    ctx: &SCategoryContext,
    x: &Permutation,
    col: &ProperStandardColumn,
) -> GradedExtAnswer {
    let norm = Normalization::TopDegreeZero;
    if *x == ctx.w0 {
        let dim = ctx.w0.compose(&col.short).content() as u64;
        let degree = ctx.w0.length() as i64 - col.y.length() as i64 - 2;
        return GradedExtAnswer::exact(dim, vec![degree], norm);
    }
    match col.profile.get(x) {
        Some(&m) => GradedExtAnswer::exact(1, vec![m - col.y.length() as i64], norm),
        None => GradedExtAnswer::zero(norm),
    }
}

/// Socle of the cokernel of `Δ̄^p_x ↪ Δ̄^p_y` for `x >= y`: the Verma-level
/// socle at the short representatives, restricted to simples indexed by
/// `X_long`.
pub fn socle_coker_proper_standard(
    ctx: &SCategoryContext,
    x: &Permutation,
    y: &Permutation,
) -> Result<Vec<SocleEntry>> {
    ctx.check_member(x)?;
    ctx.check_member(y)?;
    if !bruhat_leq(y, x) {
        return Err(Error::NotComparable(y.to_string(), x.to_string()));
    }
    let entries = crate::ext_o::socle_coker_verma(&ctx.w0p.compose(y), &ctx.w0p.compose(x))?;
    Ok(entries
        .into_iter()
        .filter(|entry| ctx.x_long_set.contains(&entry.x))
        .collect())
}

/// `dim ext^1_S(L^p_x, Δ^p_y⟨i⟩)` for standard objects.
///
/// Zero in the elementary cases (`x = y = w0`; dominant column `y = w_0^p`
/// with `x ≠ w0`; `x` outside the penultimate cell and `≠ w0`). For special
/// `y` the singular-block formula applies after translation onto the wall
/// `W^J̃ = y^{-1}W^p y`; translation annihilates `L_x` unless `x` is the
/// longest element of `x·W^J̃`, which forces the remaining branches to
/// evaluate at `x̄ = x`. For non-special `y` there is no closed formula and
/// the answer is reported unknown.
///
/// Primary degrees carry the `s-top-degree-zero` normalization (singular
/// degree plus `l(w_0^p)`); the singular-block degrees ride along in
/// `block_degrees`. Degrees of the `x = w0` branch are not determined.
pub fn ext1_simple_to_standard(
    ctx: &SCategoryContext,
    x: &Permutation,
    y: &Permutation,
) -> Result<GradedExtAnswer> {
    ctx.check_member(x)?;
    ctx.check_member(y)?;
    let col = standard_column(ctx, y)?;
    standard_cell(ctx, x, &col)
}

/// Per-column data for standard sweeps: the wall `W^J̃ = y^{-1}W^p y` with
/// the shortest representative `y̲ = w0^p·y` and its `Phi`-profile, present
/// exactly when `y` is special.
pub(crate) struct StandardColumn {
    pub y: Permutation,
    pub wall: Option<StandardWall>,
}

pub(crate) struct StandardWall {
    pub subset: ParabolicSubset,
    pub y_low: Permutation,
    pub profile: std::collections::HashMap<Permutation, i64>,
}

pub(crate) fn standard_column(ctx: &SCategoryContext, y: &Permutation) -> Result<StandardColumn> {
    let wall = match is_special(y, &ctx.p)? {
        None => None,
        Some(subset) => {
            let y_low = coset_short_rep(y, &subset, CosetSide::RightCosetOfSubgroup);
            debug_assert_eq!(y_low, ctx.w0p.compose(y));
            Some(StandardWall {
                profile: bm_phi_profile(&y_low)?,
                subset,
                y_low,
            })
        }
    };
    Ok(StandardColumn { y: y.clone(), wall })
}

pub(crate) fn standard_cell(
    ctx: &SCategoryContext,
    x: &Permutation,
    col: &StandardColumn,
) -> Result<GradedExtAnswer> {
    let norm = Normalization::STopDegreeZero;
    let antidominant = *x == ctx.w0;
    if antidominant && col.y == ctx.w0 {
        return Ok(GradedExtAnswer::zero(norm));
    }
    if !antidominant && col.y == ctx.w0p {
        return Ok(GradedExtAnswer::zero(norm));
    }
    if !antidominant && !in_penultimate_cell(x)? {
        return Ok(GradedExtAnswer::zero(norm));
    }
    let Some(wall) = &col.wall else {
        return Ok(GradedExtAnswer::unknown(norm));
    };
    if coset_long_rep(x, &wall.subset, CosetSide::RightCosetOfSubgroup) != *x {
        return Ok(GradedExtAnswer::zero(norm));
    }
    if antidominant {
        let dim = ctx
            .w0
            .compose(&wall.y_low)
            .content()
            .checked_sub(wall.subset.rank())
            .expect("content(w0·y̲) >= rank of the wall") as u64;
        return Ok(GradedExtAnswer::exact_ungraded(dim, norm));
    }
    Ok(match wall.profile.get(x) {
        Some(&m) => {
            let block_degree = m - wall.y_low.length() as i64;
            let mut answer =
                GradedExtAnswer::exact(1, vec![block_degree + ctx.w0p.length() as i64], norm);
            answer.block_degrees = Some(vec![block_degree]);
            answer
        }
        None => GradedExtAnswer::zero(norm),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_o::{ext1_simple_to_verma, ExtStatus};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ctx(n: usize, simples: &[usize]) -> SCategoryContext {
        SCategoryContext::new(ParabolicSubset::new(n, simples.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn sl3_proper_standard_table() {
        let ctx = ctx(3, &[1]);
        assert_eq!(ctx.x_long(), &[p("2,1,3"), p("2,3,1"), p("3,2,1")]);
        let dims: Vec<Vec<(u64, Option<Vec<i64>>)>> = ctx
            .x_long()
            .iter()
            .map(|x| {
                ctx.x_long()
                    .iter()
                    .map(|y| {
                        let a = ext1_simple_to_proper_standard(&ctx, x, y).unwrap();
                        (a.dim.unwrap(), a.degrees)
                    })
                    .collect()
            })
            .collect();
        let deg = |d: i64| Some(vec![d]);
        assert_eq!(
            dims,
            vec![
                vec![(0, Some(vec![])), (1, deg(-1)), (0, Some(vec![]))],
                vec![(0, Some(vec![])), (0, Some(vec![])), (1, deg(-1))],
                vec![(2, deg(0)), (2, deg(-1)), (1, deg(-2))],
            ]
        );
    }

    #[test]
    fn sl4_proper_standard_facts() {
        let x = p("4,2,3,1");
        let cases: Vec<(&[usize], &str, i64)> = vec![
            (&[], "1,3,2,4", 2),
            (&[1], "2,3,1,4", 1),
            (&[3], "1,4,2,3", 1),
            (&[1, 3], "2,4,1,3", 0),
        ];
        for (simples, y, degree) in cases {
            let ctx = ctx(4, simples);
            let y = p(y);
            let a = ext1_simple_to_proper_standard(&ctx, &x, &y).unwrap();
            assert_eq!(a.dim, Some(1), "p={{{simples:?}}} y={y}");
            assert_eq!(a.degrees, Some(vec![degree]), "p={{{simples:?}}} y={y}");
        }
    }

    #[test]
    fn socle_of_proper_standard_quotients() {
        let ctx = ctx(3, &[1]);
        let entries = socle_coker_proper_standard(&ctx, &p("2,3,1"), &p("2,1,3")).unwrap();
        assert_eq!(entries, vec![SocleEntry { x: p("2,1,3"), m: 1 }]);
        assert!(socle_coker_proper_standard(&ctx, &p("2,3,1"), &p("2,3,1"))
            .unwrap()
            .is_empty());
        let entries = socle_coker_proper_standard(&ctx, &p("3,2,1"), &p("2,1,3")).unwrap();
        assert_eq!(entries, vec![SocleEntry { x: p("2,3,1"), m: 2 }]);
        assert!(socle_coker_proper_standard(&ctx, &p("2,1,3"), &p("2,3,1")).is_err());
    }

    #[test]
    fn sl3_standard_table() {
        let ctx = ctx(3, &[1]);
        let s = p("2,1,3");
        let st = p("2,3,1");
        let w0 = p("3,2,1");

        // Special columns y = s and y = w0.
        for x in [&s, &st] {
            assert!(ext1_simple_to_standard(&ctx, x, &s).unwrap().is_zero());
        }
        let a = ext1_simple_to_standard(&ctx, &w0, &s).unwrap();
        assert_eq!(a.dim, Some(1));
        assert_eq!(a.degrees, None);

        assert!(ext1_simple_to_standard(&ctx, &s, &w0).unwrap().is_zero());
        let a = ext1_simple_to_standard(&ctx, &st, &w0).unwrap();
        assert_eq!(a.dim, Some(1));
        assert_eq!(a.degrees, Some(vec![1]));
        assert_eq!(a.block_degrees, Some(vec![0]));
        assert!(ext1_simple_to_standard(&ctx, &w0, &w0).unwrap().is_zero());

        // Non-special column y = st.
        for x in [&s, &st, &w0] {
            let a = ext1_simple_to_standard(&ctx, x, &st).unwrap();
            assert_eq!(a.status, ExtStatus::Unknown, "x={x}");
            assert_eq!(a.dim, None);
        }
    }

    #[test]
    fn trivial_parabolic_reduces_to_category_o() {
        let ctx = ctx(4, &[]);
        for x in Permutation::all(4) {
            for y in Permutation::all(4) {
                let proper = ext1_simple_to_proper_standard(&ctx, &x, &y).unwrap();
                let verma = ext1_simple_to_verma(&x, &y).unwrap();
                assert_eq!(proper.status, verma.status, "x={x} y={y}");
                assert_eq!(proper.dim, verma.dim, "x={x} y={y}");
                assert_eq!(proper.degrees, verma.degrees, "x={x} y={y}");

                let standard = ext1_simple_to_standard(&ctx, &x, &y).unwrap();
                assert_eq!(standard.dim, verma.dim, "x={x} y={y}");
                assert_eq!(standard.is_zero(), verma.is_zero(), "x={x} y={y}");
            }
        }
    }

    #[test]
    fn membership_is_enforced() {
        let ctx = ctx(3, &[1]);
        let t = p("1,3,2");
        assert!(matches!(
            ext1_simple_to_proper_standard(&ctx, &t, &p("2,1,3")),
            Err(Error::NotLongestRep { .. })
        ));
        assert!(ext1_simple_to_standard(&ctx, &p("2,1,3"), &t).is_err());
        assert!(SCategoryContext::new(ParabolicSubset::new(2, [1]).unwrap()).is_err());
    }
}
