use alloc::vec;
use alloc::vec::Vec;

use super::expr::{Expr, Var};
use super::{BoundSpec, ClassRequirement, Direction, ExtraHypothesis, Hypotheses};

fn n() -> Expr {
    Expr::var(Var::Order)
}
fn delta() -> Expr {
    Expr::var(Var::MinDegree)
}
fn pi() -> Expr {
    Expr::var(Var::Proximity)
}
fn rho() -> Expr {
    Expr::var(Var::Remoteness)
}
fn diam() -> Expr {
    Expr::var(Var::Diameter)
}
fn rad() -> Expr {
    Expr::var(Var::Radius)
}
fn c(v: i128) -> Expr {
    Expr::int(v)
}

/// `δ² − 2⌊δ/2⌋ + 1`, the minimum size of a second neighbourhood in a
/// C4-free graph.
fn ball() -> Expr {
    delta() * delta() - c(2) * (delta() / c(2)).floor() + c(1)
}

/// `1/(4n − 4)`, the even-order correction.
fn even_correction() -> Expr {
    c(1) / (c(4) * n() - c(4))
}

fn hyp(min_n: usize, min_delta: usize) -> Hypotheses {
    Hypotheses { min_n, min_delta, extra: None }
}

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &'static str,
    description: &'static str,
    class: ClassRequirement,
    hypotheses: Hypotheses,
    lhs: Expr,
    direction: Direction,
    rhs: Expr,
) -> BoundSpec {
    BoundSpec { id, description, class, hypotheses, lhs, rhs, direction }
}

/// All bounds, in catalog order.
pub fn catalog() -> Vec<BoundSpec> {
    use ClassRequirement::{Any, C4Free, TriangleFree};
    use Direction::{AtLeast, AtMost};

    vec![
        entry(
            "AH-rho-pi",
            "remoteness minus proximity, every connected graph",
            Any,
            hyp(3, 0),
            rho() - pi(),
            AtMost,
            Expr::by_parity((n() - c(1)) / c(4), (n() - c(1)) / c(4) - even_correction()),
        ),
        entry(
            "AH-diam-pi",
            "diameter minus proximity, every connected graph",
            Any,
            hyp(3, 0),
            diam() - pi(),
            AtMost,
            Expr::by_parity((c(3) * n() - c(5)) / c(4), (c(3) * n() - c(5)) / c(4) - even_correction()),
        ),
        entry(
            "AH-rad-pi",
            "radius minus proximity, every connected graph",
            Any,
            hyp(3, 0),
            rad() - pi(),
            AtMost,
            Expr::by_parity((n() - c(1)) / c(4) - c(1) / (n() - c(1)), (n() - c(1)) / c(4) - even_correction()),
        ),
        entry(
            "D-rho-pi",
            "remoteness minus proximity, minimum degree δ",
            Any,
            hyp(3, 2),
            rho() - pi(),
            AtMost,
            c(3) * n() / (c(4) * (delta() + c(1))) + c(3),
        ),
        entry(
            "D-diam-pi",
            "diameter minus proximity, minimum degree δ",
            Any,
            hyp(20, 2),
            diam() - pi(),
            AtMost,
            c(9) * n() / (c(4) * (delta() + c(1))) + c(3) * delta() / c(4),
        ),
        entry(
            "D-rad-pi",
            "radius minus proximity, minimum degree δ < n/4 − 1",
            Any,
            Hypotheses { min_n: 3, min_delta: 0, extra: Some(ExtraHypothesis::DeltaBelowQuarterOrderMinusOne) },
            rad() - pi(),
            AtMost,
            c(3) * n() / (c(4) * (delta() + c(1))) + (c(8) * delta() + c(5)) / (c(4) * (delta() + c(1))),
        ),
        entry(
            "TF-rho-pi",
            "remoteness minus proximity, triangle-free",
            TriangleFree,
            hyp(7, 3),
            rho() - pi(),
            AtMost,
            (n() + c(1)) / (c(2) * delta()) + c(4),
        ),
        entry(
            "C4-rho-pi",
            "remoteness minus proximity, C4-free",
            C4Free,
            hyp(6, 3),
            rho() - pi(),
            AtMost,
            c(5) * (n() + c(1)) / (c(4) * ball()) + Expr::frac(101, 20),
        ),
        entry(
            "EPP-diam-TF",
            "diameter, triangle-free",
            TriangleFree,
            hyp(2, 3),
            diam(),
            AtMost,
            c(4) * ((n() - delta() - c(1)) / (c(2) * delta())).ceil(),
        ),
        entry(
            "EPP-diam-C4",
            "diameter, C4-free",
            C4Free,
            hyp(2, 3),
            diam(),
            AtMost,
            (c(5) * n() / ball()).floor(),
        ),
        entry(
            "TF-pi-diam",
            "proximity from below by diameter, triangle-free",
            TriangleFree,
            hyp(8, 3),
            pi(),
            AtLeast,
            delta() * (diam() - c(4)) * (diam() - c(1)) / (c(8) * (n() - c(1))),
        ),
        entry(
            "TF-diam-pi",
            "diameter minus proximity, triangle-free",
            TriangleFree,
            hyp(8, 3),
            diam() - pi(),
            AtMost,
            c(3) * (n() - c(1)) / (c(2) * delta()) + Expr::frac(5, 2),
        ),
        entry(
            "C4-pi-diam",
            "proximity from below by diameter, C4-free",
            C4Free,
            hyp(8, 3),
            pi(),
            AtLeast,
            ball() * (diam() - c(4)) * (diam() - c(3)) / (c(20) * (n() - c(1))),
        ),
        entry(
            "C4-diam-pi",
            "diameter minus proximity, C4-free",
            C4Free,
            hyp(6, 3),
            diam() - pi(),
            AtMost,
            c(15) * n() / (c(4) * ball()) + Expr::frac(7, 4),
        ),
        entry(
            "TF-pi-rad",
            "proximity from below by radius, triangle-free",
            TriangleFree,
            hyp(6, 3),
            pi(),
            AtLeast,
            delta() / (c(2) * (n() - c(1))) * (rad() * rad() - c(7) * rad() + Expr::frac(47, 8)),
        ),
        entry(
            "TF-rad-pi",
            "radius minus proximity, triangle-free",
            TriangleFree,
            hyp(6, 3),
            rad() - pi(),
            AtMost,
            (n() - c(1)) / (c(2) * delta()) + Expr::frac(11, 2),
        ),
        entry(
            "C4-pi-rad",
            "proximity from below by radius, C4-free",
            C4Free,
            hyp(16, 3),
            pi(),
            AtLeast,
            ball() / (c(5) * (n() - c(1))) * (rad() * rad() - c(8) * rad() + Expr::frac(127, 8)),
        ),
        entry(
            "C4-rad-pi",
            "radius minus proximity, C4-free",
            C4Free,
            hyp(16, 3),
            rad() - pi(),
            AtMost,
            c(5) * (n() - c(1)) / (c(4) * ball()) + c(4),
        ),
        entry(
            "EPP-ball",
            "every second neighbourhood is large, C4-free",
            C4Free,
            hyp(2, 0),
            Expr::var(Var::MinBall2),
            AtLeast,
            ball(),
        ),
    ]
}
