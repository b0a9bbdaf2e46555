use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

use partition_core::enumerate::classical_p_table;
use partition_core::numtheory::{divisors, lcm};
use partition_core::partition_fn::{p_closed, p_recursive};
use partition_core::relprime::{lambda_divisible, lambda_inclexcl, lambda_mobius, p_psi};
use partition_core::spt::{check_inequality, spt_nk, spt_special, SptForm, SptParams};

fn table() -> &'static Vec<Vec<BigUint>> {
    static T: std::sync::OnceLock<Vec<Vec<BigUint>>> = std::sync::OnceLock::new();
    T.get_or_init(|| classical_p_table(300))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursion_matches_classical_recurrence(n in 0usize..=300, k in 1usize..=300) {
        prop_assert_eq!(p_recursive(n as i64, k as i64), table()[n][k].clone());
    }

    #[test]
    fn closed_form_matches_recursion(n in 0i64..=70, k in 1i64..=9) {
        prop_assert_eq!(p_closed(n, k).unwrap(), p_recursive(n, k));
    }

    #[test]
    fn lambda_routes_agree(n in 1u64..=3000, k in 1u64..=6) {
        let ie = lambda_inclexcl(n, k);
        prop_assert_eq!(lambda_mobius(n, k).unwrap(), ie.clone());
        prop_assert_eq!(p_psi(n, k) + ie, p_recursive(n as i64, k as i64));
    }

    #[test]
    fn lambda_is_bounded_by_single_divisor_counts(n in 2u64..=400, k in 2u64..=5) {
        // every common-factor partition has some prime dividing all parts
        let by_divisor: BigUint = divisors(n)
            .unwrap()
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| lambda_divisible(d, n, k).unwrap())
            .sum();
        prop_assert!(lambda_inclexcl(n, k) <= by_divisor);
    }

    #[test]
    fn special_forms_match_general_formula(n in 0i64..=60, k in 1i64..=12, e in 0u32..=4) {
        for form in [SptForm::Spt10, SptForm::Spt01, SptForm::Spt11, SptForm::SptA0(e), SptForm::Spt0B(e)] {
            prop_assert_eq!(spt_special(form, n, k), spt_nk(form.params(), n, k));
        }
    }

    #[test]
    fn spt_dominates_p(n in 1i64..=60, k in 1i64..=60, a in 0u32..=4, b in 0u32..=4) {
        let w = check_inequality(SptParams::new(a, b), n, k);
        prop_assert!(w.holds());
    }

    #[test]
    fn lcm_of_divisors_divides_n(n in 1u64..=5000) {
        let ds = divisors(n).unwrap();
        for w in ds.windows(2) {
            prop_assert!(n % lcm(w[0], w[1]) == 0);
        }
    }
}

#[test]
fn andrews_spt_sums_over_k_grow() {
    let mut prev = BigUint::zero();
    for n in 1..=40 {
        let total: BigUint = (1..=n).map(|k| spt_nk(SptParams::ANDREWS, n, k)).sum();
        assert!(total > prev, "n = {n}");
        prev = total;
    }
}
