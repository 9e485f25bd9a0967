use num_bigint::BigInt;
use seriesforge::labeled::{
    a_polynomial, chain_increasing_polynomial, count_fully_colored_labeled, count_mobiles,
    count_processes, count_ultrametrics, p_closed_form, p_series, p_series_by_color_recursion,
    verify_integral_relation, DegreeSpec,
};
use seriesforge::poly::PolyVar;
use seriesforge::reference;
use seriesforge::unlabeled::{
    fully_colored_unlabeled, multipartite_unlabeled, multipartite_unlabeled_polynomial,
    refined_polys, unlabeled_count,
};
use seriesforge::weight::WeightPoly;

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn symbolic_ultrametric_table() {
    for (mi, row) in reference::SYMBOLIC.iter().enumerate() {
        for (si, &v) in row.iter().enumerate() {
            assert_eq!(count_ultrametrics(si + 1, mi as u64 + 1), big(v), "s={} m={}", si + 1, mi + 1);
        }
    }
}

#[test]
fn fully_colored_labeled_table() {
    for (mi, row) in reference::FULLY_COLORED_LABELED.iter().enumerate() {
        for (si, &v) in row.iter().enumerate() {
            assert_eq!(count_fully_colored_labeled(si + 1, mi as u64 + 1), big(v));
        }
    }
}

#[test]
fn mobile_table() {
    for (mi, row) in reference::MOBILES.iter().enumerate() {
        for (si, &v) in row.iter().enumerate() {
            assert_eq!(count_mobiles(si + 1, mi as u64 + 1), big(v));
        }
    }
}

#[test]
fn a_polynomials_as_printed() {
    for (i, coeffs) in reference::A_POLYNOMIALS.iter().enumerate() {
        assert_eq!(a_polynomial(i + 1), PolyVar::from_i64s(coeffs), "a_{}", i + 1);
    }
}

#[test]
fn chain_polynomial_and_processes() {
    assert_eq!(chain_increasing_polynomial(3), PolyVar::from_i64s(&[1, 4, 3]));
    for s in 1..=8 {
        assert_eq!(count_processes(s), big(reference::SYMBOLIC[2][s - 1]));
    }
}

#[test]
fn p_expansions_as_printed() {
    for &(m, s, text) in reference::P_EXPANSIONS {
        let expected = WeightPoly::parse(text).unwrap();
        let spec = DegreeSpec::symbolic(m);
        assert_eq!(*p_series(&spec, s).unwrap().coeff(s), expected, "m={m} s={s}");
        assert_eq!(*p_series_by_color_recursion(&spec, s).coeff(s), expected, "m={m} s={s}");
        assert_eq!(p_closed_form(&spec, s).unwrap(), expected, "m={m} s={s}");
    }
}

#[test]
fn integral_relation_to_order_twelve() {
    for m in 1..=4 {
        assert!(verify_integral_relation(m, 12), "m={m}");
    }
}

#[test]
fn unlabeled_totals() {
    for (i, &v) in reference::UNLABELED_TOTALS.iter().enumerate() {
        assert_eq!(unlabeled_count(i + 1).unwrap(), big(v));
    }
}

#[test]
fn riordan_triangle_cells_and_sums() {
    let polys = refined_polys(10).unwrap();
    for (ki, row) in reference::RIORDAN_TRIANGLE.iter().enumerate() {
        for (ni, cell) in row.iter().enumerate() {
            let got = polys[ni + 1].count(ki + 1);
            assert_eq!(got, big(cell.unwrap_or(0)), "k={} n={}", ki + 1, ni + 2);
        }
    }
    for (ni, &sum) in reference::RIORDAN_SUMS.iter().enumerate() {
        assert_eq!(polys[ni + 1].total(), big(sum));
    }
}

#[test]
fn unlabeled_colored_tables() {
    for (mi, row) in reference::MULTIPARTITE_UNLABELED.iter().enumerate() {
        for (si, &v) in row.iter().enumerate() {
            assert_eq!(multipartite_unlabeled(si + 1, mi as u64 + 1).unwrap(), big(v));
        }
    }
    for (mi, row) in reference::FULLY_COLORED_UNLABELED.iter().enumerate() {
        for (si, &v) in row.iter().enumerate() {
            assert_eq!(fully_colored_unlabeled(si + 1, mi as u64 + 1).unwrap(), big(v));
        }
    }
    for (i, coeffs) in reference::UNLABELED_POLYNOMIALS.iter().enumerate() {
        assert_eq!(multipartite_unlabeled_polynomial(i + 1).unwrap(), PolyVar::from_i64s(coeffs));
    }
}
