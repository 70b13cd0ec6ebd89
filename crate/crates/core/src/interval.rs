//! Outward-rounded interval arithmetic.
//!
//! Minimal set of operations needed for rigorous lower bounds of the
//! degree-12 solvability polynomial on boxes: add, sub, mul, integer powers
//! and scaling. Every endpoint is widened by one ulp after each operation,
//! which over-approximates true directed rounding.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn down(x: f64) -> f64 {
    if x.is_finite() { x.next_down() } else { x }
}

fn up(x: f64) -> f64 {
    if x.is_finite() { x.next_up() } else { x }
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn add(self, o: Interval) -> Self {
        Interval::new(down(self.lo + o.lo), up(self.hi + o.hi))
    }

    pub fn sub(self, o: Interval) -> Self {
        Interval::new(down(self.lo - o.hi), up(self.hi - o.lo))
    }

    pub fn mul(self, o: Interval) -> Self {
        let c = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::new(down(lo), up(hi))
    }

    /// x^n for n >= 1. Intervals here are nonnegative in the certifier, but
    /// the even-power case is handled for generality.
    pub fn powi(self, n: u32) -> Self {
        assert!(n >= 1);
        if self.lo >= 0.0 {
            let mut lo = self.lo;
            let mut hi = self.hi;
            for _ in 1..n {
                lo = down(lo * self.lo);
                hi = up(hi * self.hi);
            }
            Interval::new(lo, hi)
        } else {
            let mut r = self;
            for _ in 1..n {
                r = r.mul(self);
            }
            r
        }
    }

    pub fn scale(self, c: f64) -> Self {
        if c >= 0.0 {
            Interval::new(down(self.lo * c), up(self.hi * c))
        } else {
            Interval::new(down(self.hi * c), up(self.lo * c))
        }
    }
}
