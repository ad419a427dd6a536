use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use num_bigint::BigInt;
use num_traits::One;

use super::series::{Coef, Series, Shape};
use super::{Assembly, ClosedForm, IdentityDescriptor, Param, ParamDomain, Status, Target};
use crate::exact::{self, PiPolynomial, PiPower, Rational};
use crate::specfun::{catalan, dirichlet_beta, euler_gamma, riemann_zeta};

const ZETA3: &[Target] = &[Target::Zeta3];
const CATALAN: &[Target] = &[Target::Catalan];
const BOTH: &[Target] = &[Target::Zeta3, Target::Catalan];

/// Evaluation point of the `Cl2` representations.
const R: f64 = FRAC_PI_2;

const fn entry(
    id: &'static str,
    paper_eq: &'static str,
    description: &'static str,
    series: fn(Param) -> Series,
    closed: fn(Param) -> ClosedForm,
) -> IdentityDescriptor {
    IdentityDescriptor {
        id,
        paper_eq,
        description,
        status: Status::AsPrinted,
        domain: ParamDomain::None,
        start_index: 1,
        targets: &[],
        series,
        closed,
        printed: None,
        assembly: None,
    }
}

impl IdentityDescriptor {
    const fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    const fn domain(mut self, domain: ParamDomain) -> Self {
        self.domain = domain;
        self
    }

    const fn start(mut self, start_index: u64) -> Self {
        self.start_index = start_index;
        self
    }

    const fn targets(mut self, targets: &'static [Target]) -> Self {
        self.targets = targets;
        self
    }

    const fn printed(mut self, printed: fn(Param) -> ClosedForm) -> Self {
        self.status = Status::Corrected;
        self.printed = Some(printed);
        self
    }

    const fn assembled(mut self, assembly: fn() -> Assembly) -> Self {
        self.assembly = Some(assembly);
        self
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn pow2_weight(e: u32) -> Rational {
    // 1 - 2^-e
    let p = BigInt::one() << e as usize;
    Rational::new(&p - BigInt::one(), p)
}

/// `sum c_i pi^{p_i}` from `(numer, denom, power)` triples.
fn poly(terms: &[(i64, i64, u32)]) -> ClosedForm {
    ClosedForm::Exact(terms.iter().fold(PiPolynomial::zero(), |acc, &(n, d, p)| {
        acc.plus(&PiPower::new(q(n, d), p))
    }))
}

fn numeric(v: f64) -> ClosedForm {
    ClosedForm::Numeric(v)
}

fn param(p: Param) -> u32 {
    p.expect("family parameter validated by Instance::new")
}

fn zeta3() -> f64 {
    riemann_zeta(3.0).expect("s = 3").value
}

fn beta4() -> f64 {
    dirichlet_beta(4.0).expect("s = 4").value
}

fn g() -> f64 {
    catalan().value
}

fn zeta_even_poly(n: u32) -> PiPower {
    exact::zeta_even_exact(n).expect("n >= 1")
}

fn shape(coef: Coef, base: f64) -> Shape {
    Shape::new(coef, base)
}

fn assembly_of(a: fn() -> Assembly) -> ClosedForm {
    numeric(a().invert(zeta3()))
}

fn zeta3_12() -> Assembly {
    let c = 4.0 * PI * PI / 35.0;
    Assembly {
        offset: c * (0.5 + 2.0 * g() / PI),
        scale: -c,
    }
}

fn zeta3_13() -> Assembly {
    let c = 2.0 * PI * PI / 9.0;
    Assembly {
        offset: c * LN_2,
        scale: 2.0 * c,
    }
}

fn zeta3_14() -> Assembly {
    Assembly {
        offset: 0.0,
        scale: 2.5,
    }
}

fn zeta3_15() -> Assembly {
    Assembly {
        offset: 0.0,
        scale: -PI * PI / 3.0,
    }
}

fn zeta3_16() -> Assembly {
    Assembly {
        offset: 0.0,
        scale: -4.0 * PI * PI / 7.0,
    }
}

fn zeta3_17() -> Assembly {
    let c = 4.0 * PI * PI / 35.0;
    Assembly {
        offset: c * (1.5 - (PI / 2.0).ln()),
        scale: c,
    }
}

fn zeta3_18() -> Assembly {
    let c = 8.0 * PI * PI / 9.0;
    Assembly {
        offset: -64.0 * beta4() / (3.0 * PI) + c * (4.0 / 3.0 - (PI / 2.0).ln()),
        scale: 3.0 * c,
    }
}

fn zeta3_19() -> Assembly {
    let c = 16.0 * PI * PI / 27.0;
    Assembly {
        offset: -64.0 * beta4() / (3.0 * PI) + c * (0.5 + 3.0 * g() / PI),
        scale: -3.0 * c,
    }
}

fn zeta3_20() -> Assembly {
    let c = 2.0 * PI * PI / 35.0;
    let logs = 9.0 + 138.0 * LN_2 - 18.0 * 3f64.ln() - 50.0 * 5f64.ln() - 2.0 * PI.ln();
    Assembly {
        offset: c * logs,
        scale: 2.0 * c,
    }
}

fn thm_21(p: Param) -> ClosedForm {
    let m = param(p);
    let inv_m = q(1, m as i64);
    let poly = if m % 2 == 1 {
        PiPolynomial::rational(inv_m)
    } else {
        // (2 zeta(m) (1 - 2^-m) - 1) / m
        let w = pow2_weight(m) * q(2, 1);
        PiPolynomial::from(zeta_even_poly(m / 2).scale(&w))
            .plus_rational(q(-1, 1))
            .scale(&inv_m)
    };
    ClosedForm::Exact(poly)
}

fn sum_28(p: Param, sign: i64) -> ClosedForm {
    let k = param(p);
    let lead = zeta_even_poly(k).scale(&(pow2_weight(2 * k) * q(1, k as i64)));
    let kk = k as i64;
    ClosedForm::Exact(PiPolynomial::from(lead).plus_rational(q(sign, 2 * kk * (2 * kk - 1))))
}

fn thm_29(p: Param) -> ClosedForm {
    let m = param(p);
    let inv_m = q(1, m as i64);
    let poly = if m % 2 == 1 {
        // (1 - zeta_E(m-1) (1 - 2^{1-m})) / m
        let weighted = exact::zeta_e_weighted_exact((m - 1) / 2);
        PiPolynomial::rational(q(1, 1))
            .plus(&weighted.scale(&q(-1, 1)))
            .scale(&inv_m)
    } else {
        PiPolynomial::from(zeta_even_poly(m / 2).scale(&pow2_weight(m)))
            .plus_rational(q(-1, 1))
            .scale(&inv_m)
    };
    ClosedForm::Exact(poly)
}

fn sum_37(p: Param) -> ClosedForm {
    let k = param(p);
    let w = pow2_weight(2 * k) * q(1, 2 * k as i64);
    ClosedForm::Exact(zeta_even_poly(k).scale(&w).into())
}

fn sum_38(p: Param) -> ClosedForm {
    let k = param(p);
    let w = q(1, 2 * k as i64 + 1);
    ClosedForm::Exact(exact::zeta_e_weighted_exact(k).scale(&w).into())
}

pub(super) static ENTRIES: &[IdentityDescriptor] = &[
    entry(
        "CL2_ACCEL_8",
        "Eq. (8)",
        "Cl2 acceleration at theta = pi/2: r sum zeta(2n)/(n(2n+1)) (r/2pi)^{2n} = G - r(1 - log r)",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).scale(R).denom(1.0, 0.0).denom(2.0, 1.0)),
        |_| numeric(g() - R * (1.0 - R.ln())),
    )
    .status(Status::Representation)
    .targets(CATALAN),
    entry(
        "SUM_9",
        "Eq. (9)",
        "sum zeta(2n)/(n(2n+1)16^n) = 2G/pi - 1 + log(pi/2)",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).denom(1.0, 0.0).denom(2.0, 1.0)),
        |_| numeric(2.0 * g() / PI - 1.0 + (PI / 2.0).ln()),
    )
    .targets(CATALAN),
    entry(
        "CL2_PEELED_10",
        "Eq. (10)",
        "peeled Cl2 form at theta = pi/2 with zeta(2n) - 1 coefficients",
        |_| {
            Series::Shape(
                shape(Coef::Zeta2nMinusOne, 1.0 / 16.0)
                    .scale(R)
                    .denom(1.0, 0.0)
                    .denom(2.0, 1.0),
            )
        },
        |_| {
            let head = 3.0 - (15.0 * R / 16.0).ln() - 4.0 * (5.0f64 / 3.0).ln();
            numeric(g() - R * head)
        },
    )
    .status(Status::Representation)
    .targets(CATALAN),
    entry(
        "CL2_WZL_11",
        "Eq. (11)",
        "Cl2(pi/2) = r - r log(2 sin(r/2)) - sum 2 zeta(2n) r^{2n+1}/((2n+1)(2pi)^{2n})",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).scale(-2.0 * R).denom(2.0, 1.0)),
        |_| numeric(g() - R + R * 2f64.sqrt().ln()),
    )
    .status(Status::Representation)
    .targets(CATALAN),
    entry(
        "ZETA3_12",
        "Eq. (12)",
        "zeta(3) = (4pi^2/35)(1/2 + 2G/pi - sum zeta(2n)/((n+1)(2n+1)16^n))",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).denom(1.0, 1.0).denom(2.0, 1.0)),
        |_| assembly_of(zeta3_12),
    )
    .targets(BOTH)
    .assembled(zeta3_12),
    entry(
        "ZETA3_13",
        "Eq. (13)",
        "zeta(3) = (2pi^2/9)(log 2 + 2 sum_{n>=0} zeta(2n)/((2n+3)4^n))",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25).denom(2.0, 3.0)),
        |_| assembly_of(zeta3_13),
    )
    .start(0)
    .targets(ZETA3)
    .assembled(zeta3_13),
    entry(
        "ZETA3_APERY_14",
        "Eq. (14)",
        "zeta(3) = (5/2) sum (-1)^{n-1}/(n^3 C(2n,n))",
        |_| Series::CentralBinomial,
        |_| assembly_of(zeta3_14),
    )
    .targets(ZETA3)
    .assembled(zeta3_14),
    entry(
        "ZETA3_CK_15",
        "Eq. (15)",
        "zeta(3) = -(pi^2/3) sum_{n>=0} (2n+5) zeta(2n)/((2n+1)(2n+2)(2n+3)4^n)",
        |_| {
            Series::Shape(
                shape(Coef::Zeta2n, 0.25)
                    .numer(2.0, 5.0)
                    .denom(2.0, 1.0)
                    .denom(2.0, 2.0)
                    .denom(2.0, 3.0),
            )
        },
        |_| assembly_of(zeta3_15),
    )
    .start(0)
    .targets(ZETA3)
    .assembled(zeta3_15),
    entry(
        "ZETA3_EWELL_16",
        "Eq. (16)",
        "zeta(3) = -(4pi^2/7) sum_{n>=0} zeta(2n)/((2n+1)(2n+2)4^n)",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25).denom(2.0, 1.0).denom(2.0, 2.0)),
        |_| assembly_of(zeta3_16),
    )
    .start(0)
    .targets(ZETA3)
    .assembled(zeta3_16),
    entry(
        "ZETA3_17",
        "Eq. (17)",
        "zeta(3) = (4pi^2/35)(3/2 - log(pi/2) + sum zeta(2n)/(n(n+1)(2n+1)16^n))",
        |_| {
            Series::Shape(
                shape(Coef::Zeta2n, 1.0 / 16.0)
                    .denom(1.0, 0.0)
                    .denom(1.0, 1.0)
                    .denom(2.0, 1.0),
            )
        },
        |_| assembly_of(zeta3_17),
    )
    .targets(ZETA3)
    .assembled(zeta3_17),
    entry(
        "ZETA3_18",
        "Eq. (18)",
        "zeta(3) = -64 beta(4)/(3pi) + (8pi^2/9)(4/3 - log(pi/2) + 3 sum zeta(2n)/(n(2n+1)(2n+3)16^n))",
        |_| {
            Series::Shape(
                shape(Coef::Zeta2n, 1.0 / 16.0)
                    .denom(1.0, 0.0)
                    .denom(2.0, 1.0)
                    .denom(2.0, 3.0),
            )
        },
        |_| assembly_of(zeta3_18),
    )
    .targets(ZETA3)
    .assembled(zeta3_18),
    entry(
        "ZETA3_19",
        "Eq. (19)",
        "zeta(3) = -64 beta(4)/(3pi) + (16pi^2/27)(1/2 + 3G/pi - 3 sum zeta(2n)/((2n+1)(2n+3)16^n))",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).denom(2.0, 1.0).denom(2.0, 3.0)),
        |_| assembly_of(zeta3_19),
    )
    .targets(BOTH)
    .assembled(zeta3_19),
    entry(
        "ZETA3_20",
        "Eq. (20)",
        "zeta(3) = (2pi^2/35)(9 + 138 log 2 - 18 log 3 - 50 log 5 - 2 log pi + 2 sum (zeta(2n)-1)/(n(2n+1)(n+1)16^n))",
        |_| {
            Series::Shape(
                shape(Coef::Zeta2nMinusOne, 1.0 / 16.0)
                    .denom(1.0, 0.0)
                    .denom(2.0, 1.0)
                    .denom(1.0, 1.0),
            )
        },
        |_| assembly_of(zeta3_20),
    )
    .targets(ZETA3)
    .assembled(zeta3_20),
    entry(
        "RZS_ONE",
        "Sec. 2.2 (m = 2)",
        "sum_{n>=2} (zeta(n) - 1) = 1",
        |_| Series::Shape(shape(Coef::ZetaNMinusOne, 1.0)),
        |_| poly(&[(1, 1, 0)]),
    )
    .start(2),
    entry(
        "RZS_GAMMA",
        "Sec. 2.2 (m = 2)",
        "sum_{n>=2} (zeta(n) - 1)/n = 1 - gamma",
        |_| Series::Shape(shape(Coef::ZetaNMinusOne, 1.0).denom(1.0, 0.0)),
        |_| numeric(1.0 - euler_gamma().value),
    )
    .start(2),
    entry(
        "RZS_LOG2",
        "Sec. 2.2 (m = 2)",
        "sum_{n>=1} (zeta(2n) - 1)/n = log 2",
        |_| Series::Shape(shape(Coef::Zeta2nMinusOne, 1.0).denom(1.0, 0.0)),
        |_| numeric(LN_2),
    ),
    entry(
        "THM_21",
        "Eq. (21)",
        "sum zeta(2n) C(2n,m)/(n 4^n) = 1/m (m odd), (2 zeta(m)(1 - 2^-m) - 1)/m (m even)",
        |p| {
            let (offset, m) = (0, param(p) as u64);
            Series::Shape(shape(Coef::Zeta2n, 0.25).denom(1.0, 0.0).binom(2, offset, m))
        },
        thm_21,
    )
    .domain(ParamDomain::M { min: 1 }),
    entry(
        "SUM_22",
        "Eq. (22)",
        "sum zeta(2n)/(n(2n+1)4^n) = log pi - 1",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25).denom(1.0, 0.0).denom(2.0, 1.0)),
        |_| numeric(PI.ln() - 1.0),
    ),
    entry(
        "SUM_23",
        "Eq. (23)",
        "sum zeta(2n)/4^n = 1/2",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25)),
        |_| poly(&[(1, 2, 0)]),
    ),
    entry(
        "SUM_24",
        "Eq. (24)",
        "sum zeta(2n)(2n-1)(2n-2)/4^n = 1",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25).numer(2.0, -1.0).numer(2.0, -2.0)),
        |_| poly(&[(1, 1, 0)]),
    ),
    entry(
        "SUM_25",
        "Eq. (25)",
        "sum zeta(2n)(2n-1)/4^n = pi^2/8 - 1/2",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25).numer(2.0, -1.0)),
        |_| poly(&[(-1, 2, 0), (1, 8, 2)]),
    ),
    entry(
        "SUM_26",
        "Eq. (26)",
        "sum zeta(2n) n/4^n = pi^2/16",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25).numer(1.0, 0.0)),
        |_| poly(&[(1, 16, 2)]),
    ),
    entry(
        "SUM_27",
        "Eq. (27)",
        "sum zeta(2n) n^2/4^n = 3pi^2/32",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25).numer(1.0, 0.0).numer(1.0, 0.0)),
        |_| poly(&[(3, 32, 2)]),
    ),
    entry(
        "SUM_28",
        "Eq. (28)",
        "sum zeta(2n) C(2n+1,2k)/(n 4^n) = zeta(2k)(1 - 4^-k)/k + 1/(2k(2k-1)); printed with a minus sign",
        |p| {
            let (offset, m) = (1, 2 * param(p) as u64);
            Series::Shape(shape(Coef::Zeta2n, 0.25).denom(1.0, 0.0).binom(2, offset, m))
        },
        |p| sum_28(p, 1),
    )
    .domain(ParamDomain::K { min: 1 })
    .printed(|p| sum_28(p, -1)),
    entry(
        "THM_29",
        "Eq. (29)",
        "sum zeta(2n) C(2n,m)/(n 16^n) = (1 - zeta_E(m-1)(1 - 2^{1-m}))/m (m odd), (zeta(m)(1 - 2^-m) - 1)/m (m even)",
        |p| {
            let (offset, m) = (0, param(p) as u64);
            Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).denom(1.0, 0.0).binom(2, offset, m))
        },
        thm_29,
    )
    .domain(ParamDomain::M { min: 1 }),
    entry(
        "SUM_30",
        "Eq. (30)",
        "sum zeta(2n)/(n 16^n) = log(pi/(2 sqrt 2))",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).denom(1.0, 0.0)),
        |_| numeric((PI / (2.0 * 2f64.sqrt())).ln()),
    ),
    entry(
        "SUM_31",
        "Eq. (31)",
        "sum zeta(2n)/16^n = (4 - pi)/8",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0)),
        |_| poly(&[(1, 2, 0), (-1, 8, 1)]),
    ),
    entry(
        "SUM_32",
        "Eq. (32)",
        "sum zeta(2n)/(n 4^n) = log(pi/2)",
        |_| Series::Shape(shape(Coef::Zeta2n, 0.25).denom(1.0, 0.0)),
        |_| numeric((PI / 2.0).ln()),
    ),
    entry(
        "SUM_33",
        "Eq. (33)",
        "sum zeta(2n)(2n-1)/16^n = pi^2/16 - 1/2",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).numer(2.0, -1.0)),
        |_| poly(&[(-1, 2, 0), (1, 16, 2)]),
    ),
    entry(
        "SUM_34",
        "Eq. (34)",
        "sum zeta(2n)(2n-1)(2n-2)/16^n = 1 - pi^3/32; printed as 1 - pi^3/96",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).numer(2.0, -1.0).numer(2.0, -2.0)),
        |_| poly(&[(1, 1, 0), (-1, 32, 3)]),
    )
    .printed(|_| poly(&[(1, 1, 0), (-1, 96, 3)])),
    entry(
        "SUM_35",
        "Eq. (35)",
        "sum zeta(2n) n/16^n = (pi/16)(pi/2 - 1)",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).numer(1.0, 0.0)),
        |_| poly(&[(-1, 16, 1), (1, 32, 2)]),
    ),
    entry(
        "SUM_36",
        "Eq. (36)",
        "sum zeta(2n) n^2/16^n = (pi/32)(3pi/2 - pi^2/4 - 1)",
        |_| Series::Shape(shape(Coef::Zeta2n, 1.0 / 16.0).numer(1.0, 0.0).numer(1.0, 0.0)),
        |_| poly(&[(-1, 32, 1), (3, 64, 2), (-1, 128, 3)]),
    ),
    entry(
        "SUM_37",
        "Eq. (37)",
        "sum zeta(2n)(1 - 4^-n) C(2n,2k)/(n 4^n) = zeta(2k)(1 - 4^-k)/(2k)",
        |p| {
            let (offset, m) = (0, 2 * param(p) as u64);
            Series::Shape(
                shape(Coef::Zeta2nWeighted, 0.25)
                    .denom(1.0, 0.0)
                    .binom(2, offset, m),
            )
        },
        sum_37,
    )
    .domain(ParamDomain::K { min: 1 }),
    entry(
        "SUM_38",
        "Eq. (38)",
        "sum zeta(2n)(1 - 4^-n) C(2n,2k+1)/(n 4^n) = zeta_E(2k)(1 - 4^-k)/(2k+1)",
        |p| {
            let (offset, m) = (0, 2 * param(p) as u64 + 1);
            Series::Shape(
                shape(Coef::Zeta2nWeighted, 0.25)
                    .denom(1.0, 0.0)
                    .binom(2, offset, m),
            )
        },
        sum_38,
    )
    .domain(ParamDomain::K { min: 0 }),
];
