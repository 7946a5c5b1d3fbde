//! The placement sums `Theta_i` over ordered set partitions `(R, S, T)` of
//! `{0..m-1}` with `|R| = 1`, `|S| = i`.

use crate::YPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    pub r: usize,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

impl Placement {
    /// `[r, s..., t...]`, the variable map taking the standard placement
    /// `(0, 1..=i, i+1..)` to this one.
    pub fn targets(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(1 + self.s.len() + self.t.len());
        v.push(self.r);
        v.extend(&self.s);
        v.extend(&self.t);
        v
    }
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (idx, &first) in items.iter().enumerate() {
        for mut rest in subsets(&items[idx + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `m * C(m-1, i)` placements, in a fixed order.
pub fn theta_placements(i: usize, m: usize) -> Vec<Placement> {
    assert!(i < m, "Theta_{i} needs i <= m - 1");
    let mut out = Vec::new();
    for r in 0..m {
        let others: Vec<usize> = (0..m).filter(|&k| k != r).collect();
        for s in subsets(&others, i) {
            let t = others.iter().copied().filter(|k| !s.contains(k)).collect();
            out.push(Placement { r, s, t });
        }
    }
    out
}

/// `Theta_i f = sum_(R,S,T) f(x_R, x_S, x_T)`, with `f` given by its
/// value at each placement.
pub fn theta_symmetrize(
    f: impl Fn(&Placement) -> YPoly,
    i: usize,
    m: usize,
) -> YPoly {
    let mut out = YPoly::zero(crate::algebra::VarKind::Y, m);
    for p in theta_placements(i, m) {
        out.add_assign_poly(&f(&p));
    }
    out
}

/// `Theta_i` of a polynomial in the standard placement order, i.e. the sum
/// of its images under all placements.
pub fn theta_images(base: &YPoly, i: usize) -> YPoly {
    let m = base.arity();
    theta_symmetrize(|p| base.embed(&p.targets(), m), i, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;
    use crate::algebra::{Monomial, VarKind};

    #[test]
    fn counts() {
        assert_eq!(theta_placements(0, 2).len(), 2);
        assert_eq!(theta_placements(1, 3).len(), 6);
        assert_eq!(theta_placements(2, 5).len(), 5 * 6);
        let p = &theta_placements(0, 2);
        assert_eq!(p[0], Placement { r: 0, s: vec![], t: vec![1] });
        assert_eq!(p[1], Placement { r: 1, s: vec![], t: vec![0] });
    }

    #[test]
    fn m2_i0_is_two_terms() {
        // f(x_1; x_2) = x_1^2 x_2
        let f = YPoly::monomial(VarKind::Y, Monomial::from_slice(&[2, 1]), rat(1, 1));
        let t = theta_images(&f, 0);
        assert_eq!(t.to_string(), "y1^2*y2 + y1*y2^2");
    }

    #[test]
    fn block_symmetric_input_gives_symmetric_output() {
        // symmetric in S = {1, 2} and in T = {3}
        let f = YPoly::from_terms(
            VarKind::Y,
            4,
            [
                (Monomial::from_slice(&[3, 1, 1, 0]), rat(1, 1)),
                (Monomial::from_slice(&[1, 2, 0, 5]), rat(-2, 1)),
                (Monomial::from_slice(&[1, 0, 2, 5]), rat(-2, 1)),
            ],
        );
        let t = theta_images(&f, 2);
        assert!(t.is_symmetric());
    }
}
