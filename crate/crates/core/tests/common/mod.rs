//! Numerical oracles shared by the integration tests. Nothing here calls into
//! the library's own integration or estimation code.

#![allow(dead_code, clippy::excessive_precision)]

/// 15-point Gauss-Kronrod nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss-Kronrod on a finite interval.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (v, err) = gk15(f, a, b);
        if err <= tol || depth >= 50 {
            return v;
        }
        let m = 0.5 * (a + b);
        rec(f, a, m, tol / 2.0, depth + 1) + rec(f, m, b, tol / 2.0, depth + 1)
    }
    if a == b {
        return 0.0;
    }
    rec(f, a, b, tol, 0)
}

/// `∫_a^∞ f` via `x = a + t/(1-t)`.
pub fn integrate_to_inf(f: &dyn Fn(f64) -> f64, a: f64, tol: f64) -> f64 {
    let g = |t: f64| {
        if t >= 1.0 {
            return 0.0;
        }
        let s = 1.0 - t;
        f(a + t / s) / (s * s)
    };
    integrate(&g, 0.0, 1.0, tol)
}

/// Iterated integral of `f(x, y)` over `x >= x0`, `y >= y0`, split along the
/// line `y - y0 = slope (x - x0)` where densities of this family have a kink.
pub fn integrate_quadrant(f: &dyn Fn(f64, f64) -> f64, x0: f64, y0: f64, slope: f64, tol: f64) -> (f64, f64) {
    let below = |x: f64| {
        let yk = y0 + slope * (x - x0);
        integrate(&|y| f(x, y), y0, yk, tol * 1e-2)
    };
    let above = |x: f64| {
        let yk = y0 + slope * (x - x0);
        integrate_to_inf(&|y| f(x, y), yk, tol * 1e-2)
    };
    (integrate_to_inf(&below, x0, tol), integrate_to_inf(&above, x0, tol))
}

/// Plain Pareto II pdf, written out independently of the library.
pub fn pa_pdf(x: f64, mu: f64, sigma: f64, alpha: f64) -> f64 {
    if x < mu {
        0.0
    } else {
        alpha / sigma * (1.0 + (x - mu) / sigma).powf(-alpha - 1.0)
    }
}

/// Continuous-part density from the product-of-marginals form.
pub fn bvpac_oracle(z1: f64, z2: f64, p: &[f64; 7]) -> f64 {
    let [mu1, mu2, s1, s2, a0, a1, a2] = *p;
    let c = (a0 + a1 + a2) / (a1 + a2);
    let t1 = (z1 - mu1) / s1;
    let t2 = (z2 - mu2) / s2;
    if t1 < t2 {
        c * pa_pdf(z1, mu1, s1, a1) * pa_pdf(z2, mu2, s2, a0 + a2)
    } else {
        c * pa_pdf(z1, mu1, s1, a0 + a1) * pa_pdf(z2, mu2, s2, a2)
    }
}

pub const XI: [[f64; 7]; 4] = [
    [0.0, 0.0, 1.0, 0.5, 1.0, 0.3, 1.4],
    [1.0, 2.0, 0.4, 0.5, 2.0, 1.2, 1.4],
    [0.0, 0.0, 1.4, 0.5, 1.0, 1.0, 1.4],
    [0.0, 0.0, 1.4, 0.5, 2.0, 0.4, 0.5],
];

/// SplitMix64 stream for test-only Monte Carlo.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform on [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Pareto II(0, 1, alpha) by inversion.
    pub fn pareto(&mut self, alpha: f64) -> f64 {
        (1.0 - self.uniform()).powf(-1.0 / alpha) - 1.0
    }
}
