use std::io::Read;
use std::path::Path;

use rug::Rational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use shavis_core::arith::numeric::normalize_projective;
use shavis_core::arith::rational::parse_rational;
use shavis_core::arith::TernaryCubic;
use shavis_core::covariants::{
    caylean, dual_pencil as core_dual_pencil, hessian, invariants, j_solve_on_pencil,
    singular_members,
};
use shavis_core::ellcurve::point_search as core_point_search;
use shavis_core::flex::{flex_points, hesse_labeling, rational_flexes};
use shavis_core::genus2::{pipeline, Options};
use shavis_core::theta::{anti_isometry_check, ThetaStabilizer};

use crate::docs::{
    matrix, rat, rats, split_inline, BilinearDocument, CubicDocument, VisualizeDocument,
    WeierstrassDocument,
};
use crate::{emit, CliError, CubicInput, Global};

fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }
}

pub fn read_document<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_source(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_cubic(c: &CubicInput) -> Result<TernaryCubic<Rational>, CliError> {
    let doc = match (&c.input, &c.coeffs) {
        (Some(p), _) => read_document::<CubicDocument>(p)?,
        (None, Some(s)) => CubicDocument {
            monomial_order: crate::docs::CUBIC_ORDER.into(),
            coefficients: split_inline(s),
        },
        (None, None) => {
            return Err(CliError::Parse(
                "give a cubic with --input or --coeffs".into(),
            ))
        }
    };
    let g = doc.to_cubic()?;
    if g.is_zero() {
        return Err(CliError::Parse("the zero cubic is not a curve".into()));
    }
    Ok(g)
}

fn target_j(g: &Global) -> Result<Option<Rational>, CliError> {
    g.target_j
        .as_deref()
        .map(|s| parse_rational(s).map_err(|e| CliError::Parse(e.to_string())))
        .transpose()
}

fn target_e2(g: &Global) -> Result<Option<WeierstrassDocument>, CliError> {
    Ok(g.target_e2.as_deref().map(|s| WeierstrassDocument {
        a_invariants: split_inline(s),
    }))
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantsOut {
    pub c4: String,
    pub c6: String,
    pub discriminant: String,
    pub singular: bool,
    pub j: Option<String>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct CovariantsOut {
    pub input: CubicDocument,
    pub hessian: CubicDocument,
    pub caylean: CubicDocument,
    pub invariants: InvariantsOut,
}

pub fn covariants(c: &CubicInput) -> Result<String, CliError> {
    let f = load_cubic(c)?;
    let inv = invariants(&f)?;
    emit(&CovariantsOut {
        input: CubicDocument::from_cubic(&f),
        hessian: CubicDocument::from_cubic(&hessian(&f)),
        caylean: CubicDocument::from_cubic(&caylean(&f)?),
        invariants: InvariantsOut {
            c4: rat(&inv.c4),
            c6: rat(&inv.c6),
            discriminant: rat(&inv.discriminant()),
            singular: inv.is_singular(),
            j: inv.j().as_ref().map(rat),
        },
    })
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularOut {
    pub total: usize,
    /// Rational `(s:t)` of singular members of `s A + t B`.
    pub rational: Vec<[String; 2]>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct DualPencilOut {
    pub input: CubicDocument,
    pub basis: [CubicDocument; 2],
    pub singular_members: SingularOut,
}

pub fn dual_pencil(c: &CubicInput, g: &Global) -> Result<String, CliError> {
    let f = load_cubic(c)?;
    let p = core_dual_pencil(&f)?;
    let sm = singular_members(&p, g.precision_bits)?;
    emit(&DualPencilOut {
        input: CubicDocument::from_cubic(&f),
        basis: [
            CubicDocument::from_cubic(&p.a),
            CubicDocument::from_cubic(&p.b),
        ],
        singular_members: SingularOut {
            total: sm.total,
            rational: sm.rational.iter().map(|r| [rat(&r.s), rat(&r.t)]).collect(),
        },
    })
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct FlexOut {
    pub label: usize,
    /// `[re, im]` per coordinate, scaled so the largest coordinate is 1.
    pub point: Vec<[String; 2]>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct FlexesOut {
    pub input: CubicDocument,
    pub precision_bits: u32,
    pub flexes: Vec<FlexOut>,
    /// The twelve lines as label triples.
    pub lines: Vec<[usize; 3]>,
    pub rational_flexes: Vec<[String; 3]>,
    pub min_separation: String,
}

pub fn flexes(c: &CubicInput, digits: usize, g: &Global) -> Result<String, CliError> {
    let f = load_cubic(c)?;
    let prec = g.precision_bits;
    let phi = flex_points(&f, prec)?;
    let lab = hesse_labeling(&phi)?;
    let digits = digits.max(2);
    let flexes = lab
        .labeled_points(&phi)
        .iter()
        .enumerate()
        .map(|(i, p)| FlexOut {
            label: i + 1,
            point: normalize_projective(p)
                .iter()
                .map(|z| {
                    [
                        z.real().to_string_radix(10, Some(digits)),
                        z.imag().to_string_radix(10, Some(digits)),
                    ]
                })
                .collect(),
        })
        .collect();
    emit(&FlexesOut {
        input: CubicDocument::from_cubic(&f),
        precision_bits: prec,
        flexes,
        lines: lab.lines().to_vec(),
        rational_flexes: rational_flexes(&f, prec)?
            .iter()
            .map(|p| [rat(&p[0]), rat(&p[1]), rat(&p[2])])
            .collect(),
        min_separation: format!("{:.3e}", phi.min_separation()),
    })
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilizerOut {
    pub size: usize,
    pub abelian: bool,
    pub exponent_three: bool,
    pub pairing_alternating: bool,
    pub pairing_nondegenerate: bool,
    /// `pairing[i][j] = k` means the commutator of elements `i, j` is `w^k`.
    pub pairing: Vec<Vec<u8>>,
}

impl StabilizerOut {
    fn new(s: &ThetaStabilizer) -> Self {
        StabilizerOut {
            size: s.elements.len(),
            abelian: s.is_abelian(),
            exponent_three: s.has_exponent_three(),
            pairing_alternating: s.pairing_alternating(),
            pairing_nondegenerate: s.pairing_nondegenerate(),
            pairing: s.pairing.iter().map(|r| r.to_vec()).collect(),
        }
    }

    fn ok(&self) -> bool {
        self.size == 9
            && self.abelian
            && self.exponent_three
            && self.pairing_alternating
            && self.pairing_nondegenerate
    }
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaOut {
    pub input: CubicDocument,
    pub precision_bits: u32,
    pub stabilizer: StabilizerOut,
    pub dual_stabilizer: StabilizerOut,
    /// `lambda[i]`: index of the inverse transpose of element `i` in the dual stabilizer.
    pub lambda: Vec<usize>,
    pub onto: bool,
    pub pairing_inverted: bool,
    pub passed: bool,
}

/// Prints the report and exits with the math code when any check fails.
pub fn theta_check(c: &CubicInput, g: &Global) -> Result<String, CliError> {
    let f = load_cubic(c)?;
    let phi = flex_points(&f, g.precision_bits)?;
    let r = anti_isometry_check(&phi)?;
    let stabilizer = StabilizerOut::new(&r.stabilizer);
    let dual_stabilizer = StabilizerOut::new(&r.dual_stabilizer);
    let passed = r.passed() && stabilizer.ok() && dual_stabilizer.ok();
    let text = emit(&ThetaOut {
        input: CubicDocument::from_cubic(&f),
        precision_bits: g.precision_bits,
        stabilizer,
        dual_stabilizer,
        lambda: r.lambda.to_vec(),
        onto: r.onto,
        pairing_inverted: r.pairing_inverted,
        passed,
    })?;
    if passed {
        Ok(text)
    } else {
        print!("{text}");
        Err(CliError::Check(
            "theta stabilizer or anti-isometry check".into(),
        ))
    }
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionOut {
    pub parameter: [String; 2],
    pub member: CubicDocument,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct PencilSolveOut {
    pub input: CubicDocument,
    pub j: String,
    pub basis: [CubicDocument; 2],
    pub solutions: Vec<SolutionOut>,
}

pub fn pencil_solve(c: &CubicInput, g: &Global) -> Result<String, CliError> {
    let f = load_cubic(c)?;
    let j = match (target_j(g)?, target_e2(g)?) {
        (Some(j), None) => j,
        (None, Some(w)) => w.to_model()?.j(),
        (Some(j), Some(w)) => {
            if w.to_model()?.j() != j {
                return Err(CliError::Parse(
                    "--target-j and --target-e2 disagree".into(),
                ));
            }
            j
        }
        (None, None) => {
            return Err(CliError::Parse(
                "pencil-solve needs --target-j or --target-e2".into(),
            ))
        }
    };
    let p = core_dual_pencil(&f)?;
    let sols = j_solve_on_pencil(&p, &j, g.precision_bits)?;
    emit(&PencilSolveOut {
        input: CubicDocument::from_cubic(&f),
        j: rat(&j),
        basis: [
            CubicDocument::from_cubic(&p.a),
            CubicDocument::from_cubic(&p.b),
        ],
        solutions: sols
            .iter()
            .map(|(par, m)| SolutionOut {
                parameter: [rat(&par.s), rat(&par.t)],
                member: CubicDocument::from_cubic(m),
            })
            .collect(),
    })
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct PointSearchOut {
    pub input: CubicDocument,
    pub height_bound: i64,
    pub points: Vec<[String; 3]>,
}

pub fn point_search(c: &CubicInput, g: &Global) -> Result<String, CliError> {
    let f = load_cubic(c)?;
    emit(&PointSearchOut {
        input: CubicDocument::from_cubic(&f),
        height_bound: g.height_bound,
        points: core_point_search(&f, g.height_bound)
            .iter()
            .map(|p| p.map(|c| c.to_string()))
            .collect(),
    })
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelOut {
    pub a_invariants: Vec<String>,
    pub j: String,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct E2Out {
    pub a_invariants: Vec<String>,
    pub j: String,
    /// `"weierstrass"` when the second factor is the target model,
    /// `"pencil"` when it is a member of the dual pencil of `E1`.
    pub model: String,
    pub cubic: CubicDocument,
    pub origin: Vec<String>,
    /// A target model was given but no linear equivalence to it exists.
    pub fell_back: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct NonIsogenyOut {
    pub prime: u64,
    pub count1: u64,
    pub count2: u64,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct TriedOut {
    pub convention: String,
    pub form: BilinearDocument,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct InvolutionOut {
    pub exact: Option<bool>,
    pub numeric_max: String,
    pub checked: usize,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOut {
    pub samples: usize,
    pub max_residual: String,
    pub threshold: String,
    pub vacuous: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificatesOut {
    pub samples_used: usize,
    pub conditioning: String,
    pub max_fit_residual: String,
    pub involution: InvolutionOut,
    pub distinct_from_incidence: bool,
    pub verify: VerifyOut,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultBundle {
    pub version: String,
    pub seed: u64,
    pub precision_bits: u32,
    pub samples: usize,
    pub height_bound: i64,
    pub e1: ModelOut,
    pub e2: E2Out,
    /// `(s:t)` on the dual pencil of the covering cubic.
    pub pencil_parameter: Option<[String; 2]>,
    pub covering_member: Option<CubicDocument>,
    pub pencil_member: CubicDocument,
    /// `M` with `pencil_member(M u)` proportional to the target cubic.
    pub equivalence: Option<Vec<Vec<String>>>,
    pub rational_point: Option<Vec<String>>,
    pub non_isogeny: Option<NonIsogenyOut>,
    pub incidence_form: BilinearDocument,
    pub c_form: BilinearDocument,
    pub c_equation: String,
    pub convention: String,
    pub reference_match: Option<bool>,
    pub tried: Vec<TriedOut>,
    pub certificates: CertificatesOut,
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

pub fn visualize(path: &Path, g: &Global) -> Result<String, CliError> {
    let doc: VisualizeDocument = read_document(path)?;
    let e1 = doc.e1.to_model()?;
    let delta = doc.covering.to_cubic()?;
    let target = match target_e2(g)?.or(doc.target_e2.clone()) {
        Some(w) => Some(w.to_model()?),
        None => None,
    };
    let tj = target_j(g)?;
    if let (Some(j), Some(w)) = (&tj, &target) {
        if &w.j() != j {
            return Err(CliError::Parse(
                "--target-j and the target model disagree".into(),
            ));
        }
    }
    let opts = Options {
        precision: g.precision_bits,
        seed: g.seed,
        height_bound: g.height_bound,
        samples: g.samples,
        fresh: g.fresh,
        iso_bound: g.iso_bound,
        reference: doc
            .reference_form
            .as_ref()
            .map(|r| r.to_form())
            .transpose()?,
        target_j: if target.is_some() { None } else { tj },
    };
    let b = pipeline(&e1.cubic(), &delta, target.as_ref(), &opts)?;
    let s = &b.surface;
    let r = &b.result;
    emit(&ResultBundle {
        version: env!("CARGO_PKG_VERSION").into(),
        seed: opts.seed,
        precision_bits: opts.precision,
        samples: opts.samples,
        height_bound: opts.height_bound,
        e1: ModelOut {
            a_invariants: rats(&s.e1.coeffs()),
            j: rat(&s.e1.j()),
        },
        e2: E2Out {
            a_invariants: rats(&s.e2.coeffs()),
            j: rat(&b.j2),
            model: if s.weierstrass2 {
                "weierstrass"
            } else {
                "pencil"
            }
            .into(),
            cubic: CubicDocument::from_cubic(&s.g),
            origin: rats(&s.origin2),
            fell_back: s.fell_back,
        },
        pencil_parameter: s.parameter.as_ref().map(|p| [rat(&p.s), rat(&p.t)]),
        covering_member: s.member.as_ref().map(CubicDocument::from_cubic),
        pencil_member: CubicDocument::from_cubic(&s.pencil_member),
        equivalence: s.equivalence.as_ref().map(matrix),
        rational_point: s.rational_point.as_ref().map(|p| rats(p)),
        non_isogeny: s.certificate.as_ref().map(|c| NonIsogenyOut {
            prime: c.prime,
            count1: c.count1,
            count2: c.count2,
        }),
        incidence_form: BilinearDocument::from_form(&s.incidence),
        c_form: BilinearDocument::from_form(&r.form),
        c_equation: r.form.to_string(),
        convention: b.convention.label().into(),
        reference_match: b.reference_match,
        tried: b
            .tried
            .iter()
            .map(|(c, f)| TriedOut {
                convention: c.label().into(),
                form: BilinearDocument::from_form(f),
            })
            .collect(),
        certificates: CertificatesOut {
            samples_used: r.samples_used,
            conditioning: sci(r.conditioning),
            max_fit_residual: sci(r.max_fit_residual),
            involution: InvolutionOut {
                exact: r.involution.exact,
                numeric_max: sci(r.involution.numeric_max),
                checked: r.involution.checked,
            },
            distinct_from_incidence: r.distinct_from_incidence,
            verify: VerifyOut {
                samples: b.verify.samples,
                max_residual: sci(b.verify.max_residual),
                threshold: sci(b.verify.threshold),
                vacuous: b.verify.vacuous,
            },
        },
    })
}
