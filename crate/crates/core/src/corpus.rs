//! Named example algebras used by the tests, benches and CLI.

use crate::algebra::{Algebra, Presentation};
use crate::field::Field;
use crate::qh::WeightPoset;

/// `1 -> 2 -> ... -> n`, arrows `a1, a2, ...`, no relations.
pub fn linear_a(n: usize) -> Algebra {
    linear_a_rad(n, n)
}

/// `kA_n / rad^l`: the linear quiver with all paths of length `l` killed.
pub fn linear_a_rad(n: usize, l: usize) -> Algebra {
    let mut p = Presentation::new(Field::Rationals, n);
    for k in 1..n {
        p = p.arrow(&format!("a{k}"), k, k + 1);
    }
    if l >= 2 {
        for start in 1..n {
            if start + l <= n {
                let w: Vec<String> = (start..start + l).rev().map(|k| format!("a{k}")).collect();
                p = p.relation(&[(1, &w.join("*"))]);
            }
        }
    }
    p.build().expect("linear quiver")
}

/// `k[t]/t^l`.
pub fn truncated_polynomial(l: usize) -> Algebra {
    let w = vec!["t"; l].join("*");
    Presentation::new(Field::Rationals, 1).arrow("t", 1, 1).relation(&[(1, &w)]).build().expect("loop")
}

/// Zig-zag `A_{2n+1}`: odd vertices are sources with arrows to both even
/// neighbours; no relations.
pub fn zigzag(n: usize) -> Algebra {
    let v = 2 * n + 1;
    let mut p = Presentation::new(Field::Rationals, v);
    for s in (1..=v).step_by(2) {
        if s > 1 {
            p = p.arrow(&format!("l{s}"), s, s - 1);
        }
        if s < v {
            p = p.arrow(&format!("r{s}"), s, s + 1);
        }
    }
    p.build().expect("zig-zag quiver")
}

/// `1 => 2 => 3` with `m` arrows `1 -> 2` and `n` arrows `2 -> 3`.
pub fn multi_arrow(m: usize, n: usize) -> Algebra {
    let mut p = Presentation::new(Field::Rationals, 3);
    for k in 1..=m {
        p = p.arrow(&format!("a{k}"), 1, 2);
    }
    for k in 1..=n {
        p = p.arrow(&format!("b{k}"), 2, 3);
    }
    p.build().expect("multi-arrow quiver")
}

/// The order `1 > 3 > 2` on the multi-arrow quiver.
pub fn multi_arrow_order() -> WeightPoset {
    WeightPoset::total(&[1, 2, 0]).expect("permutation")
}

/// `α: 1->2, β: 2->4, γ: 2->3, δ: 3->4, ε: 4->5` with `βα = δγα` and `εβ = 0`.
pub fn biserial() -> Algebra {
    Presentation::new(Field::Rationals, 5)
        .arrow("alpha", 1, 2)
        .arrow("beta", 2, 4)
        .arrow("gamma", 2, 3)
        .arrow("delta", 3, 4)
        .arrow("eps", 4, 5)
        .relation(&[(1, "beta*alpha"), (-1, "delta*gamma*alpha")])
        .relation(&[(1, "eps*beta")])
        .build()
        .expect("biserial example")
}

pub fn semisimple(n: usize) -> Algebra {
    Presentation::new(Field::Rationals, n).build().expect("no arrows")
}

pub fn kronecker() -> Algebra {
    Presentation::new(Field::Rationals, 2).arrow("x", 1, 2).arrow("y", 1, 2).build().expect("kronecker")
}

/// Commutative square `1 -> 2 -> 4`, `1 -> 3 -> 4`.
pub fn commutative_square() -> Algebra {
    Presentation::new(Field::Rationals, 4)
        .arrow("a", 1, 2)
        .arrow("b", 2, 4)
        .arrow("c", 1, 3)
        .arrow("d", 3, 4)
        .relation(&[(1, "b*a"), (-1, "d*c")])
        .build()
        .expect("square")
}

/// The standard corpus, with names.
pub fn corpus() -> Vec<(String, Algebra)> {
    let mut v = vec![
        ("A3".to_string(), linear_a(3)),
        ("A3/rad2".to_string(), linear_a_rad(3, 2)),
        ("A4".to_string(), linear_a(4)),
        ("A4/rad2".to_string(), linear_a_rad(4, 2)),
        ("A4/rad3".to_string(), linear_a_rad(4, 3)),
        ("biserial".to_string(), biserial()),
        ("k[t]/t^3".to_string(), truncated_polynomial(3)),
        ("k[t]/t^4".to_string(), truncated_polynomial(4)),
        ("zigzag A5".to_string(), zigzag(2)),
        ("semisimple 2".to_string(), semisimple(2)),
        ("kronecker".to_string(), kronecker()),
        ("square".to_string(), commutative_square()),
    ];
    for (m, n) in [(1, 1), (1, 2), (2, 1)] {
        v.push((format!("multi-arrow {m},{n}"), multi_arrow(m, n)));
    }
    v
}

/// Corpus members that are quasi-hereditary for the natural order, or
/// the given order, with that order.
pub fn qh_corpus() -> Vec<(String, Algebra, WeightPoset)> {
    let mut v: Vec<(String, Algebra, WeightPoset)> = corpus()
        .into_iter()
        .filter(|(name, _)| !name.starts_with("k[t]") && !name.starts_with("multi"))
        .map(|(name, a)| {
            let p = WeightPoset::natural(a.num_vertices());
            (name, a, p)
        })
        .collect();
    for (m, n) in [(1, 1), (1, 2), (2, 1)] {
        v.push((format!("multi-arrow {m},{n}"), multi_arrow(m, n), multi_arrow_order()));
    }
    v
}
