mod common;

use bvpareto::grid::{density_grid, GridSpec};
use bvpareto::io::{read_csv_from, write_csv_to};
use bvpareto::{partition, sample_bvpa, sample_bvpac, Params7, DEFAULT_TIE_TOLERANCE};
use common::XI;

#[test]
fn wide_grid_holds_most_of_the_mass() {
    let p = Params7::from_slice(&XI[0]).unwrap();
    // nodes at cell midpoints of [0, 100] so the node sum is a midpoint rule
    let h = 0.02;
    let grid = density_grid(&p, &GridSpec::square(h / 2.0, 100.0 - h / 2.0, 5000)).unwrap();
    let mass = grid.riemann_mass();
    assert!(mass > 0.9 && mass < 1.0, "{mass}");
}

#[test]
fn wide_scale_grid_is_finite_and_nonnegative() {
    let p = Params7::from_slice(&XI[3]).unwrap();
    let grid = density_grid(&p, &GridSpec::square(0.0, 5.0, 101)).unwrap();
    assert!(grid.values.iter().flatten().all(|v| v.is_finite() && *v >= 0.0));
}

#[test]
fn simulated_files_round_trip_exactly() {
    for xi in &XI {
        let p = Params7::from_slice(xi).unwrap();
        for data in [sample_bvpac(1000, &p, 1).unwrap(), sample_bvpa(1000, &p, 1).unwrap()] {
            let mut buf = Vec::new();
            write_csv_to(&mut buf, &data).unwrap();
            let back = read_csv_from(buf.as_slice()).unwrap();
            assert_eq!(back, data);
        }
    }
}

#[test]
fn continuous_file_contents_have_no_ties() {
    let p = Params7::from_slice(&[0.0, 0.0, 1.0, 1.0, 2.0, 0.4, 0.5]).unwrap();
    let mut buf = Vec::new();
    write_csv_to(&mut buf, &sample_bvpac(2000, &p, 17).unwrap()).unwrap();
    let back = read_csv_from(buf.as_slice()).unwrap();
    let part = partition(&back, 0.0, 0.0, 1.0, 1.0, DEFAULT_TIE_TOLERANCE).unwrap();
    assert_eq!(part.n0(), 0);
}
