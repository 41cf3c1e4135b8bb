use charposet::cyclotomic::{ArithOp, Conductor, CycInt};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const CONDUCTORS: [u32; 9] = [2, 4, 8, 16, 3, 9, 27, 5, 25];

fn prime_of(n: u32) -> u32 {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap()
}

/// Quotient of `num` by a monic `den`, both lowest degree first; panics on
/// a nonzero remainder.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (q, r) = div_rem(num, den);
    assert!(r.iter().all(|&c| c == 0), "remainder {r:?}");
    q
}

fn div_rem(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1);
    let mut r = num.to_vec();
    if r.len() <= dd {
        r.resize(dd, 0);
        return (vec![0], r);
    }
    let mut q = vec![0; r.len() - dd];
    for i in (dd..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            q[i - dd] = c;
            for (j, &d) in den.iter().enumerate() {
                r[i - dd + j] -= c * d;
            }
        }
    }
    r.truncate(dd);
    (q, r)
}

/// `Φ_n = (x^n - 1) / (x^{n/p} - 1)` for a prime power `n`.
fn phi_poly(n: u32) -> Vec<i64> {
    let m = (n / prime_of(n)) as usize;
    let mut num = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut den = vec![0; m + 1];
    den[0] = -1;
    den[m] = 1;
    exact_div(&num, &den)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn oracle_mul(n: u32, a: &[i64], b: &[i64]) -> Vec<i64> {
    div_rem(&poly_mul(a, b), &phi_poly(n)).1
}

fn elem(c: Conductor) -> impl Strategy<Value = CycInt> {
    prop::collection::vec(-30i64..=30, c.phi()).prop_map(move |v| c.from_coeffs(v).unwrap())
}

fn run(n: u32, body: impl Fn(Conductor, &CycInt, &CycInt, &CycInt) -> Result<(), TestCaseError>) {
    let c = Conductor::new(n).unwrap();
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        ..Config::default()
    });
    runner
        .run(&(elem(c), elem(c), elem(c)), |(a, b, d)| {
            body(c, &a, &b, &d)
        })
        .unwrap_or_else(|e| panic!("conductor {n}: {e}"));
}

#[test]
fn cyclotomic_polynomials_match_division() {
    for n in CONDUCTORS {
        let c = Conductor::new(n).unwrap();
        assert_eq!(c.cyclotomic_polynomial(), phi_poly(n), "n = {n}");
        assert_eq!(c.phi() + 1, phi_poly(n).len());
    }
}

#[test]
fn ring_axioms() {
    for n in CONDUCTORS {
        run(n, |c, a, b, d| {
            prop_assert_eq!(&(a + b), &(b + a));
            prop_assert_eq!(&(a * b), &(b * a));
            prop_assert_eq!(&(&(a + b) + d), &(a + &(b + d)));
            prop_assert_eq!(&(&(a * b) * d), &(a * &(b * d)));
            prop_assert_eq!(&(a * &(b + d)), &(&(a * b) + &(a * d)));
            prop_assert_eq!(&(a + &c.zero()), a);
            prop_assert_eq!(&(a * &c.one()), a);
            prop_assert!((a - a).is_zero());
            prop_assert_eq!(&(a + &-a), &c.zero());
            Ok(())
        });
    }
}

#[test]
fn products_match_polynomial_oracle() {
    for n in CONDUCTORS {
        run(n, |_, a, b, _| {
            let got = a.arith(b, ArithOp::Mul).unwrap();
            prop_assert_eq!(got.coeffs(), &oracle_mul(n, a.coeffs(), b.coeffs())[..]);
            Ok(())
        });
    }
}

#[test]
fn conjugation_is_an_involutive_automorphism() {
    for n in CONDUCTORS {
        run(n, |_, a, b, _| {
            prop_assert_eq!(&a.conjugate().conjugate(), a);
            prop_assert_eq!(&(a + b).conjugate(), &(&a.conjugate() + &b.conjugate()));
            prop_assert_eq!(&(a * b).conjugate(), &(&a.conjugate() * &b.conjugate()));
            Ok(())
        });
    }
}

#[test]
fn roots_of_unity() {
    for n in CONDUCTORS {
        let c = Conductor::new(n).unwrap();
        let z = c.zeta_pow(1);
        let mut acc = c.one();
        let mut sum = c.zero();
        for k in 0..n as i64 {
            assert_eq!(acc, c.zeta_pow(k));
            assert_eq!(c.zeta_pow(k).conjugate(), c.zeta_pow(-k));
            assert_eq!(&c.zeta_pow(k) * &c.zeta_pow(-k), c.one());
            sum = &sum + &acc;
            acc = &acc * &z;
        }
        assert_eq!(acc, c.one(), "ζ^n = 1 for n = {n}");
        assert!(sum.is_zero(), "Σ ζ^k = 0 for n = {n}");
    }
}

proptest! {
    #[test]
    fn norms_of_units_are_one(n in prop::sample::select(CONDUCTORS.to_vec()), k in -100i64..100) {
        let c = Conductor::new(n).unwrap();
        let z = c.zeta_pow(k);
        prop_assert_eq!((&z * &z.conjugate()).as_integer(), Ok(1));
    }

    #[test]
    fn integer_division_roundtrip(v in prop::collection::vec(-50i64..50, 4), m in 1i64..9) {
        let c = Conductor::new(8).unwrap();
        let x = c.from_coeffs(v).unwrap();
        prop_assert_eq!(x.scale(m).exact_div_int(m).unwrap(), x.clone());
        if m > 1 && !x.is_zero() && x.coeffs().iter().any(|&k| k % m != 0) {
            prop_assert!(x.exact_div_int(m).is_err());
        }
    }
}

#[test]
fn mismatched_conductors_are_rejected() {
    let a = Conductor::new(4).unwrap().one();
    let b = Conductor::new(8).unwrap().one();
    assert!(a.arith(&b, ArithOp::Add).is_err());
    assert!(Conductor::new(6).is_err());
    assert!(Conductor::new(4)
        .unwrap()
        .from_coeffs(vec![1, 2, 3])
        .is_err());
}
