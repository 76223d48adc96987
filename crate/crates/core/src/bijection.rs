//! The two bijections `S_n(321) -> S_n(132)`, each available by several routes.
//!
//! Gamma rewrites 132 occurrences; Theta goes through RSK and a Dyck path.
//! Every route here must agree with its siblings, and `theta_via_gamma`
//! ties the two maps together: `Theta(s) = Gamma(irc(s))`.

use crate::error::{Error, Result};
use crate::perm::{bar, Pattern, Permutation};
use crate::rsk::{dyck_from_tableaux, rsk_tableaux, template_from_dyck};
use crate::template::{
    build_t_hat, build_t_rc_bar, diagonal_ls, rcl_corners, realize, template_from_ls, InvertedL,
    Square, Template,
};

/// Replaces the smallest 132 occurrence `abc` at `(i, j, k)` with `bca` until none is left.
pub fn gamma_iterative(p: &Permutation) -> Result<Permutation> {
    p.require_avoids(Pattern::P321)?;
    let n = p.n();
    let cap = n * n * n;
    let mut work = p.clone().into_entries();
    for _ in 0..=cap {
        let current = Permutation::new(work.clone())?;
        let Some(t) = current.smallest_132() else {
            return Ok(current);
        };
        let (a, b, c) = (work[t.i - 1], work[t.j - 1], work[t.k - 1]);
        work[t.i - 1] = b;
        work[t.j - 1] = c;
        work[t.k - 1] = a;
    }
    Err(Error::SafetyCapExceeded {
        perm: p.to_string(),
        cap,
    })
}

/// One rewrite step of [`gamma_iterative`], or `None` if `p` avoids 132.
pub fn gamma_step(p: &Permutation) -> Option<Permutation> {
    let t = p.smallest_132()?;
    let mut w = p.entries().to_vec();
    let (a, b, c) = (w[t.i - 1], w[t.j - 1], w[t.k - 1]);
    w[t.i - 1] = b;
    w[t.j - 1] = c;
    w[t.k - 1] = a;
    Some(Permutation::new(w).expect("rewrite permutes entries"))
}

/// Gamma read off the diagonal inverted-L template built from the L-corners.
pub fn gamma_template(p: &Permutation) -> Result<Permutation> {
    realize(&build_t_hat(p)?)
}

/// The region left of the Dyck path built from the RSK tableau pair.
pub fn theta_rsk_template(p: &Permutation) -> Result<Template> {
    p.require_avoids(Pattern::P321)?;
    let pair = rsk_tableaux(p)?;
    let path = dyck_from_tableaux(&pair.insertion, &pair.recording)?;
    template_from_dyck(&path, p.n())
}

pub fn theta_rsk(p: &Permutation) -> Result<Permutation> {
    realize(&theta_rsk_template(p)?)
}

/// Inverted L's at `(i, i)` with legs `bar(v_i)` (down) and `bar(p_i)` (right)
/// for the rcL-corners `(v_i, p_i)` in increasing order.
pub fn theta_corners_template(p: &Permutation) -> Result<Template> {
    let n = p.n();
    let legs: Vec<(usize, usize)> = rcl_corners(p)?
        .corners
        .iter()
        .map(|c| (bar(n, c.value), bar(n, c.position)))
        .collect();
    template_from_ls(n, &diagonal_ls(&legs))
}

pub fn theta_corners(p: &Permutation) -> Result<Permutation> {
    realize(&theta_corners_template(p)?)
}

/// Starts from the rc-template, slides the `i`-th largest inverted L to
/// corner `(i, i)` and reflects everything across the main diagonal.
pub fn theta_slide_flip_template(p: &Permutation) -> Result<Template> {
    let rc_bar = build_t_rc_bar(p)?;
    let n = rc_bar.n();
    let mut ls: Vec<InvertedL> = rc_bar
        .inverted_l_corners()
        .into_iter()
        .map(|corner| InvertedL {
            corner,
            down: n + 1 - corner.row,
            right: n + 1 - corner.col,
        })
        .collect();
    ls.sort_by_key(|l| std::cmp::Reverse(l.size()));
    let moved: Vec<InvertedL> = ls
        .iter()
        .enumerate()
        .map(|(i, l)| l.slide_to(Square::new(i + 1, i + 1)).transpose())
        .collect();
    template_from_ls(n, &moved)
}

pub fn theta_slide_flip(p: &Permutation) -> Result<Permutation> {
    realize(&theta_slide_flip_template(p)?)
}

pub fn theta_via_gamma(p: &Permutation) -> Result<Permutation> {
    p.require_avoids(Pattern::P321)?;
    gamma_iterative(&p.irc())
}

/// Canonical Gamma.
pub fn gamma(p: &Permutation) -> Result<Permutation> {
    gamma_template(p)
}

/// Canonical Theta.
pub fn theta(p: &Permutation) -> Result<Permutation> {
    theta_corners(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_on_worked_example() {
        let s = p("14237586");
        assert_eq!(gamma_iterative(&s).unwrap(), p("78643521"));
        assert_eq!(gamma_template(&s).unwrap(), p("78643521"));
        assert_eq!(gamma_step(&s).unwrap(), p("42137586"));
        assert_eq!(gamma_template(&p("21")).unwrap(), p("21"));
        let id = Permutation::identity(5);
        assert_eq!(gamma_iterative(&id).unwrap(), id);
        assert_eq!(gamma_template(&id).unwrap(), id);
        assert_eq!(gamma_step(&id), None);
    }

    #[test]
    fn theta_routes_on_worked_example() {
        let s = p("14237586");
        let expected = p("75423168");
        assert_eq!(theta_rsk(&s).unwrap(), expected);
        assert_eq!(theta_corners(&s).unwrap(), expected);
        assert_eq!(theta_slide_flip(&s).unwrap(), expected);
        assert_eq!(theta_via_gamma(&s).unwrap(), expected);
        assert_eq!(gamma_iterative(&p("24137568")).unwrap(), expected);
        assert_eq!(
            theta_corners_template(&s).unwrap().row_counts(),
            vec![6, 4, 3, 1, 1, 0, 0, 0]
        );
        assert_eq!(
            theta_corners_template(&s).unwrap(),
            theta_rsk_template(&s).unwrap()
        );
        assert_eq!(
            theta_slide_flip_template(&s).unwrap(),
            theta_rsk_template(&s).unwrap()
        );
    }

    #[test]
    fn theta_small_cases() {
        for q in [Permutation::identity(1), Permutation::identity(4), p("21")] {
            for f in [theta_rsk, theta_corners, theta_slide_flip, theta_via_gamma] {
                assert_eq!(f(&q).unwrap(), q);
            }
        }
        let single = Template::from_squares(2, [Square::new(1, 1)]).unwrap();
        assert_eq!(theta_corners_template(&p("21")).unwrap(), single);
        assert_eq!(theta_slide_flip_template(&p("21")).unwrap(), single);
    }

    #[test]
    fn non_avoiders_are_refused() {
        let bad = p("321");
        for f in [
            gamma_iterative,
            gamma_template,
            theta_rsk,
            theta_corners,
            theta_slide_flip,
            theta_via_gamma,
        ] {
            assert!(matches!(
                f(&bad),
                Err(Error::ContainsPattern {
                    pattern: Pattern::P321,
                    ..
                })
            ));
        }
    }
}
