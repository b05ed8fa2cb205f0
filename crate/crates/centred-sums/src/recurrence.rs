//! Memoized evaluation of the sums via their order-lowering recurrences.
//!
//! Both recurrences relate order r+2 to order r, so the evaluation of a
//! target (r, n) walks an anti-diagonal down to the order-0/1 seed row and
//! climbs back up iteratively. Odd and even orders never mix.
//!
//! U-recurrence: 4 U_{r+2}(n) = n^2 U_r(n) - 4 n (n-1) U_r(n-2),
//! seeded by U_0(n) = 2^n, U_1(2n) = n C(2n,n), U_1(2n+1) = (2n+1) C(2n,n).
//!
//! S-recurrence: S_{r+2}(n) = n^2 S_r(n) - 2n(2n-1) S_r(n-1),
//! seeded by S_0(n) = 2^{2n}, S_1(n) = n C(2n,n).

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::numeric::{choose, pow2, rat_int};

/// Which family of sums a table evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    U,
    S,
}

/// Environment variable consulted for an optional memo-entry cap.
pub const CACHE_CAP_ENV: &str = "CENTRED_SUMS_CACHE_CAP";

/// A memo table over (r, n) for one sum family.
///
/// Concurrent readers observe only fully-computed entries: values are built
/// outside the lock and inserted whole. Entries are never evicted; `cap`
/// bounds growth by skipping inserts once the table is full (results are
/// still returned, just not cached).
pub struct RecurrenceTable {
    kind: SumKind,
    memo: Mutex<HashMap<(u32, u64), BigRational>>,
    cap: Option<usize>,
}

impl RecurrenceTable {
    /// A table with the cap taken from `CENTRED_SUMS_CACHE_CAP` if set.
    pub fn new(kind: SumKind) -> Self {
        let cap = std::env::var(CACHE_CAP_ENV)
            .ok()
            .and_then(|v| v.parse::<usize>().ok());
        Self::with_cap(kind, cap)
    }

    pub fn with_cap(kind: SumKind, cap: Option<usize>) -> Self {
        Self {
            kind,
            memo: Mutex::new(HashMap::new()),
            cap,
        }
    }

    pub fn kind(&self) -> SumKind {
        self.kind
    }

    /// Exact value at (r, n), from the memo when available.
    pub fn eval(&self, r: u32, n: u64) -> BigRational {
        if let Some(hit) = self.lookup(r, n) {
            return hit;
        }
        let value = self.climb(r, n);
        self.insert(r, n, value.clone());
        value
    }

    /// Keys currently cached; exposed so tests can assert which seed rows an
    /// evaluation touched.
    pub fn cached_keys(&self) -> Vec<(u32, u64)> {
        let mut keys: Vec<_> = self.memo.lock().unwrap().keys().copied().collect();
        keys.sort_unstable();
        keys
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, r: u32, n: u64) -> Option<BigRational> {
        self.memo.lock().unwrap().get(&(r, n)).cloned()
    }

    fn insert(&self, r: u32, n: u64, value: BigRational) {
        let mut memo = self.memo.lock().unwrap();
        if let Some(cap) = self.cap {
            if memo.len() >= cap && !memo.contains_key(&(r, n)) {
                return;
            }
        }
        memo.entry((r, n)).or_insert(value);
    }

    /// Iterative bottom-up evaluation: fill the seed row along the argument
    /// anti-diagonal, then raise the order two at a time.
    fn climb(&self, r: u32, n: u64) -> BigRational {
        let parity = r % 2;
        let steps = ((r - parity) / 2) as u64;
        let stride = match self.kind {
            SumKind::U => 2u64,
            SumKind::S => 1u64,
        };
        // row[j] holds the value at order `row_order` and argument n - stride*j
        let mut row: Vec<BigRational> = (0..=steps)
            .map(|j| {
                let arg = n as i64 - (stride * j) as i64;
                if arg < 0 {
                    return BigRational::zero();
                }
                if let Some(hit) = self.lookup(parity, arg as u64) {
                    return hit;
                }
                let value = self.seed(parity, arg);
                self.insert(parity, arg as u64, value.clone());
                value
            })
            .collect();
        let mut row_order = parity;
        while row_order < r {
            let next_order = row_order + 2;
            let mut next = Vec::with_capacity(row.len() - 1);
            for j in 0..row.len() - 1 {
                let arg = n as i64 - (stride * j as u64) as i64;
                if arg < 0 {
                    next.push(BigRational::zero());
                    continue;
                }
                if let Some(hit) = self.lookup(next_order, arg as u64) {
                    next.push(hit);
                    continue;
                }
                let value = if arg == 0 {
                    // both sums vanish at argument 0 once the order is positive
                    BigRational::zero()
                } else {
                    self.step(arg as u64, &row[j], &row[j + 1])
                };
                self.insert(next_order, arg as u64, value.clone());
                next.push(value);
            }
            row = next;
            row_order = next_order;
        }
        row.swap_remove(0)
    }

    /// One application of the order-raising recurrence at argument n:
    /// given lower-order values at n and at n - stride, produce order + 2 at n.
    fn step(&self, n: u64, at_n: &BigRational, at_prev: &BigRational) -> BigRational {
        let n_big = BigInt::from(n);
        match self.kind {
            SumKind::U => {
                // (n^2 U_r(n) - 4 n (n-1) U_r(n-2)) / 4
                let lead = BigRational::from_integer(&n_big * &n_big) * at_n;
                let trail =
                    BigRational::from_integer(BigInt::from(4) * &n_big * (&n_big - 1)) * at_prev;
                (lead - trail) / rat_int(4)
            }
            SumKind::S => {
                // n^2 S_r(n) - 2 n (2n-1) S_r(n-1)
                let lead = BigRational::from_integer(&n_big * &n_big) * at_n;
                let trail = BigRational::from_integer(
                    BigInt::from(2) * &n_big * (BigInt::from(2) * &n_big - 1),
                ) * at_prev;
                lead - trail
            }
        }
    }

    /// Order-0 and order-1 closed-form seeds.
    fn seed(&self, parity: u32, arg: i64) -> BigRational {
        if arg < 0 {
            return BigRational::zero();
        }
        let arg = arg as u64;
        match (self.kind, parity) {
            (SumKind::U, 0) => pow2(arg as i64),
            (SumKind::U, 1) => {
                let half = arg / 2;
                let multiplier = if arg % 2 == 0 { half } else { arg };
                BigRational::from_integer(BigInt::from(multiplier) * choose(2 * half, half))
            }
            (SumKind::S, 0) => pow2(2 * arg as i64),
            (SumKind::S, 1) => BigRational::from_integer(BigInt::from(arg) * choose(2 * arg, arg)),
            _ => unreachable!("parity is 0 or 1"),
        }
    }
}

/// U_r(n) by the order-lowering recurrence, with a table local to the call.
pub fn u_recurrence(r: u32, n: u64) -> BigRational {
    RecurrenceTable::with_cap(SumKind::U, None).eval(r, n)
}

/// S_r(n) by its recurrence, with a table local to the call.
pub fn s_recurrence(r: u32, n: u64) -> BigRational {
    RecurrenceTable::with_cap(SumKind::S, None).eval(r, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direct::{s_direct, u_direct};
    use crate::numeric::rat_int;

    #[test]
    fn u_seed_values() {
        // (2n+1) C(2n,n) at n = 2
        assert_eq!(u_recurrence(1, 5), rat_int(30));
        assert_eq!(u_recurrence(0, 0), rat_int(1));
        // one recurrence step from the order-0 seeds
        assert_eq!(u_recurrence(2, 2), rat_int(2));
    }

    #[test]
    fn s_seed_values() {
        assert_eq!(s_recurrence(0, 4), rat_int(256));
        // 1 * S_0(1) - 2 * 1 * 1 * S_0(0) = 4 - 2
        assert_eq!(s_recurrence(2, 1), rat_int(2));
        assert_eq!(s_recurrence(3, 1), rat_int(2));
    }

    #[test]
    fn recurrence_agrees_with_direct() {
        let table = RecurrenceTable::with_cap(SumKind::U, None);
        for r in 0..=12u32 {
            for n in 0..=60u64 {
                assert_eq!(table.eval(r, n), u_direct(r, n as i64), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn s_recurrence_agrees_with_direct_and_substitution() {
        let s_table = RecurrenceTable::with_cap(SumKind::S, None);
        let u_table = RecurrenceTable::with_cap(SumKind::U, None);
        for r in 0..=10u32 {
            for n in 0..=25u64 {
                let s = s_table.eval(r, n);
                assert_eq!(s, s_direct(r, n as i64), "direct r={r} n={n}");
                assert_eq!(s, u_table.eval(r, 2 * n), "substitution r={r} n={n}");
            }
        }
    }

    #[test]
    fn evaluation_stays_within_one_parity() {
        for &target in &[7u32, 8] {
            let table = RecurrenceTable::with_cap(SumKind::U, None);
            table.eval(target, 11);
            for (r, _) in table.cached_keys() {
                assert_eq!(
                    r % 2,
                    target % 2,
                    "order {r} cached while evaluating {target}"
                );
            }
        }
    }

    #[test]
    fn cap_bounds_table_growth() {
        let table = RecurrenceTable::with_cap(SumKind::U, Some(3));
        for r in 0..=8u32 {
            table.eval(r, 10);
        }
        assert!(table.len() <= 3);
        // values still correct when the cache is saturated
        assert_eq!(table.eval(8, 10), u_direct(8, 10));
    }

    #[test]
    fn concurrent_evaluations_agree() {
        let table = RecurrenceTable::with_cap(SumKind::U, None);
        std::thread::scope(|scope| {
            for offset in 0..4u32 {
                let table = &table;
                scope.spawn(move || {
                    for r in 0..=10u32 {
                        for n in 0..=30u64 {
                            assert_eq!(
                                table.eval(r + offset % 2, n),
                                u_direct(r + offset % 2, n as i64)
                            );
                        }
                    }
                });
            }
        });
    }
}
