use derangements::orthopoly::laguerre;
use derangements::poly::{self, MultiPoly, RatPoly};
use derangements::series::{
    jf_moments, verify_jfraction_theorem, verify_lambda_minus1, Flavor, JFraction, PowerSeries, SeriesPreset,
};

/// Evaluates the truncated fraction bottom-up as series:
/// `F_h = 1/(1 - γ_h t - β_{h+1} t² F_{h+1})`.
fn fraction_by_division(spec: &JFraction, order: usize) -> Vec<RatPoly> {
    let depth = order / 2 + 1;
    let t = PowerSeries::variable(order, Flavor::Ogf);
    let t2 = t.mul(&t).unwrap();
    let mut f = PowerSeries::one(order, Flavor::Ogf);
    for h in (0..=depth).rev() {
        let g = t.scale(&spec.gamma(h).to_rational());
        let b = t2.scale(&spec.beta(h + 1).to_rational()).mul(&f).unwrap();
        let denom = PowerSeries::one(order, Flavor::Ogf).sub(&g).unwrap().sub(&b).unwrap();
        f = denom.inverse().unwrap();
    }
    f.coefficients().to_vec()
}

#[test]
fn motzkin_moments_match_fraction_division() {
    for spec in [JFraction::full(), JFraction::dnx(), JFraction::dn1()] {
        let m = jf_moments(&spec, 7);
        let f = fraction_by_division(&spec, 7);
        for n in 0..=7 {
            assert_eq!(m[n].to_rational(), f[n], "{} n={n}", spec.name);
        }
    }
}

#[test]
fn theorem_through_seven() {
    let cases = verify_jfraction_theorem(7);
    assert_eq!(cases.len(), 8);
    for c in cases {
        assert!(c.pass, "n={}: {} vs {}", c.n, c.moment, c.brute);
    }
}

#[test]
fn specialising_full_fraction_gives_dnx() {
    let full = jf_moments(&JFraction::full(), 8);
    let dnx = jf_moments(&JFraction::dnx(), 8);
    for n in 0..=8 {
        let s = full[n].subs([(poly::LAMBDA, MultiPoly::one()), (poly::Y, MultiPoly::one())]);
        assert_eq!(s, dnx[n], "n={n}");
    }
}

#[test]
fn moment_degrees_are_bounded() {
    for (n, m) in jf_moments(&JFraction::full(), 8).iter().enumerate() {
        if n >= 2 {
            // rlm + exc + cyc <= n + n + n/2 and every term has x, y and λ.
            let d = m.total_degree().unwrap();
            assert!(d as usize <= 2 * n + n / 2, "n={n}");
            assert!(m.degree_in(poly::X).unwrap() < n as u32);
        }
    }
}

#[test]
fn lambda_minus_one_through_eight() {
    let cases = verify_lambda_minus1(8);
    assert_eq!(cases.len(), 7);
    assert!(cases.iter().all(|c| c.pass));
    let s = SeriesPreset::LambdaMinusOne.expand(4);
    let want: MultiPoly = "-x^3*y - x^2*y^2 - x*y^3".parse().unwrap();
    assert_eq!(s.coefficient(4).unwrap().to_integer().unwrap(), want);
}

#[test]
fn laguerre_generating_function() {
    let s = SeriesPreset::LaguerreEgf.expand(4);
    let alpha = MultiPoly::var(poly::A);
    for n in 0..=4 {
        assert_eq!(*s.coefficient(n).unwrap(), laguerre(n, &alpha).to_rational(), "n={n}");
    }
}

#[test]
fn first_column_egf_matches_published_column() {
    let s = SeriesPreset::FirstColumnEgf.expand(6);
    let want = [1, 1, 3, 11, 53, 309, 2119];
    for (n, w) in want.iter().enumerate() {
        assert_eq!(*s.coefficient(n).unwrap(), RatPoly::int(*w));
    }
}

#[test]
fn egf_derivative_identity() {
    // (e^{-x}/(1-x))' + e^{-x}/(1-x) = e^{-x}/(1-x)^2
    let d = SeriesPreset::DerangementEgf.expand(9);
    let lhs = d.derivative().add(&d).unwrap();
    assert!(lhs.clipped);
    assert_eq!(lhs, {
        let mut r = SeriesPreset::FirstColumnEgf.expand(8);
        r.clipped = true;
        r
    });
}
