//! Values frozen from an independent symbolic computation: Wronskians of
//! classical polynomials formed directly in `z`, and extended potentials
//! and eigenfunctions formed from `x`-Wronskians of the full eigenstates.

use exop::classical::Family;
use exop::darboux::{extended_eigenfunction, extended_potential, PotentialSpec};
use exop::eop::{eop_by_route, Route};
use exop::kernel::rational::{int, parse_rational, q};
use exop::partitions::{Partition, SpectralIndices};
use exop::{BigFloat, QPoly, Real};

fn poly(coeffs: &[&str]) -> QPoly {
    QPoly::new(coeffs.iter().map(|c| parse_rational(c).unwrap()).collect())
}

fn check_all_routes(family: Family, lambda: &str, coeffs: &[&str]) {
    let lambda: Partition = lambda.parse().unwrap();
    let expect = poly(coeffs);
    for route in Route::ALL {
        let got = eop_by_route(&family, &lambda, route).unwrap().as_wronskian();
        assert_eq!(got, expect, "{family} {lambda} via {route}");
    }
}

#[test]
fn hermite_wronskians() {
    check_all_routes(Family::hermite(), "2,2", &["3/4", "0", "0", "0", "1"]);
    check_all_routes(
        Family::hermite(),
        "3,2,2",
        &["0", "-45/4", "0", "15/2", "0", "3", "0", "6"],
    );
    check_all_routes(Family::hermite(), "2,1", &["0", "0", "0", "2"]);
}

#[test]
fn laguerre_wronskians() {
    check_all_routes(
        Family::laguerre(q(3, 2)).unwrap(),
        "2,1",
        &["-315/4", "135/2", "-21", "2"],
    );
    check_all_routes(
        Family::laguerre(q(7, 3)).unwrap(),
        "3,3,1",
        &[
            "-1057239040/729",
            "462542080/243",
            "-9898240/9",
            "9618560/27",
            "-617120/9",
            "7752",
            "-472",
            "12",
        ],
    );
}

#[test]
fn jacobi_wronskians() {
    check_all_routes(
        Family::jacobi(q(3, 4), q(5, 2)).unwrap(),
        "1,1",
        &["19/75", "-2/3", "1"],
    );
    check_all_routes(
        Family::jacobi(q(3, 2), q(3, 4)).unwrap(),
        "2,2,1",
        &["12198/200651", "28278/91205", "15612/34595", "1356/629", "702/187", "6"],
    );
}

fn close(got: &BigFloat, expect: &str) {
    let e = BigFloat::parse(expect);
    let rel = ((got.clone() - e.clone()) / e).abs();
    assert!(rel < BigFloat::from_f64(1e-35), "got {got}, expected {expect}");
}

fn check_extension(spec: PotentialSpec, n: &str, mu: usize, x: (i64, i64), v: &str, psi: &str) {
    let n: SpectralIndices = n.parse().unwrap();
    let x = BigFloat::from_rational(&q(x.0, x.1));
    close(&extended_potential(&spec, &n, &x).unwrap(), v);
    close(&extended_eigenfunction(&spec, &n, mu, &x).unwrap().value, psi);
}

#[test]
fn extended_states() {
    check_extension(
        PotentialSpec::harmonic(int(1)).unwrap(),
        "1,2",
        0,
        (7, 10),
        "0.7036224719607224899779289221206251970632",
        "1.187524704622125583212019898013698150806",
    );
    check_extension(
        PotentialSpec::isotonic(int(1), q(3, 2)).unwrap(),
        "1,2",
        3,
        (13, 10),
        "8.345554938254995290400749665792499442473",
        "-7.841167103654731048811377866435299281869",
    );
    check_extension(
        PotentialSpec::trigonometric(q(3, 2), q(3, 2)).unwrap(),
        "1,2",
        0,
        (3, 5),
        "40.76968562826144006278366549183810525987",
        "5.065172431370933383125013084239267076659",
    );
    check_extension(
        PotentialSpec::trigonometric(q(3, 4), q(5, 2)).unwrap(),
        "2,3",
        1,
        (2, 5),
        "-11.64480449987915691102910061684651503691",
        "4.063905499749294915519324648351983123159",
    );
}
