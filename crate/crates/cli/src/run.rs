use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use qasl::acceptance::run_all;
use qasl::degeneration::{extract_graded, verify_degeneration, DegenerationReport};
use qasl::grassmann::{
    muir_consistency, verify_symmetric_asl, AslReport, Grassmannian, StraighteningTable,
};
use qasl::io::{LatticeSpec, PresentationSpec, TableDto};
use qasl::report::CheckReport;
use qasl::richardson::{format_polynomial, RichardsonAlgebra};
use qasl::scalars::QScalar;
use qasl::toric::{
    confluence_certify, gkdim_toric, symbolic_nf, torus_embedding, ToricPresentation,
};
use qasl::{Error, Result, Specialization};
use serde::{Deserialize, Serialize};

use crate::spec::{Command, Format, Job};

/// Rendered output of a job and the exit code it calls for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub exit: i32,
}

/// Exit code for an error: 2 for bad input, 3 for a failed check, 4 when
/// the Hilbert numerator cannot be reconstructed.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ReconstructionFailed(_) => 4,
        Error::RankDeficient { .. }
        | Error::NotInSpan(_)
        | Error::InvariantViolation { .. }
        | Error::NotConfluent(_)
        | Error::WeightViolation { .. }
        | Error::Overflow(_) => 3,
        _ => 2,
    }
}

/// `{"error": {"kind", "message"}, "exit_code"}`.
pub fn error_json(e: &Error) -> String {
    serde_json::json!({
        "error": {"kind": e.kind(), "message": e.to_string()},
        "exit_code": exit_code(e),
    })
    .to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationDto {
    pub sizes: Vec<u32>,
    pub iota: BTreeMap<String, Vec<u32>>,
    pub omega: BTreeMap<String, u128>,
    pub weight: BTreeMap<String, u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeAnalysis {
    pub size: usize,
    pub rank: usize,
    pub distributive: bool,
    pub distributivity_witness: Option<[String; 3]>,
    pub join_irreducibles: Vec<String>,
    pub irr_plus: Vec<String>,
    pub birkhoff_rank: Option<usize>,
    pub incomparable_pairs: usize,
    pub realization: Option<RealizationDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassVerify {
    pub asl: AslReport,
    pub muir: CheckReport,
    pub graded_presentation: bool,
    pub graded_detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertOut {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub interval: Vec<String>,
    pub degree_bound: usize,
    pub coefficients: Vec<String>,
    pub krull: usize,
    pub numerator: String,
    pub numerator_coefficients: Vec<String>,
    pub palindromic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkOut {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub gk_dim: u64,
    pub formula: u64,
    pub rank_plus_one: u64,
    pub coset_difference: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinOut {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub indicator: bool,
    pub numerator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerateOut {
    pub presentation: PresentationSpec,
    pub margins: Vec<(String, String, u128)>,
    pub report: DegenerationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NfOut {
    pub word: Vec<String>,
    pub monomial: Vec<String>,
    pub scalar: QScalar,
    pub formal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyOut {
    pub confluence: CheckReport,
    pub gk_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusImage {
    pub element: String,
    pub scalar: QScalar,
    pub exponents: Vec<i64>,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusOut {
    pub irr_plus: Vec<String>,
    pub images: Vec<TorusImage>,
    pub relations: CheckReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestLine {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn input(job: &Job) -> Result<String> {
    read(
        job.input
            .as_deref()
            .ok_or_else(|| Error::Invalid("missing --input".into()))?,
    )
}

fn render<T: Serialize>(
    job: &Job,
    value: &T,
    text: impl FnOnce(&T) -> String,
    ok: bool,
) -> Result<Outcome> {
    let body = match job.format {
        Format::Json => {
            serde_json::to_string_pretty(value).map_err(|e| Error::Invalid(e.to_string()))? + "\n"
        }
        Format::Text => text(value),
    };
    Ok(Outcome {
        body,
        exit: if ok { 0 } else { 3 },
    })
}

fn specialized(table: StraighteningTable, q: &Specialization) -> Result<StraighteningTable> {
    match q {
        Specialization::Symbolic => Ok(table),
        Specialization::At(t) => table.specialize(t),
    }
}

fn presentation(job: &Job) -> Result<(ToricPresentation, PresentationSpec)> {
    let spec: PresentationSpec = serde_json::from_str(&input(job)?)?;
    let p = spec.build()?;
    Ok((p, spec))
}

/// Runs a validated job.
pub fn run(job: &Job) -> Result<Outcome> {
    match job.command {
        Command::LatticeAnalyze => lattice_analyze(job),
        Command::GrassTable => grass_table(job),
        Command::GrassVerify => grass_verify(job),
        Command::RichardsonHilbert => richardson_hilbert(job),
        Command::RichardsonGk => richardson_gk(job),
        Command::RichardsonGorenstein => richardson_gorenstein(job),
        Command::Degenerate => degenerate(job),
        Command::ToricNf => toric_nf(job),
        Command::ToricCertify => toric_certify(job),
        Command::ToricTorus => toric_torus(job),
        Command::Selftest => selftest(job),
    }
}

fn lattice_analyze(job: &Job) -> Result<Outcome> {
    let spec: LatticeSpec = serde_json::from_str(&input(job)?)?;
    let l = spec.build_lattice()?;
    let labels = |xs: &[usize]| {
        xs.iter()
            .map(|&x| l.label(x).to_string())
            .collect::<Vec<_>>()
    };
    let (irr, irr_plus) = l.join_irreducibles();
    let distributive = l.is_distributive();
    let realization = if distributive {
        let (_, r) = spec.build()?;
        let mut dto = RealizationDto {
            sizes: r.sizes().to_vec(),
            iota: BTreeMap::new(),
            omega: BTreeMap::new(),
            weight: BTreeMap::new(),
        };
        for x in 0..l.len() {
            let name = l.label(x).to_string();
            dto.iota.insert(name.clone(), r.iota(x).to_vec());
            dto.omega.insert(name.clone(), r.omega(x));
            dto.weight.insert(name, r.weight(x));
        }
        Some(dto)
    } else {
        None
    };
    let out = LatticeAnalysis {
        size: l.len(),
        rank: l.rank(),
        distributive,
        distributivity_witness: l
            .distributivity_witness()
            .map(|(a, b, c)| [a, b, c].map(|x| l.label(x).to_string())),
        join_irreducibles: labels(&irr),
        irr_plus: labels(&irr_plus),
        birkhoff_rank: l.birkhoff_check().ok().map(|b| b.rank),
        incomparable_pairs: l.incomparable_pairs().len(),
        realization,
    };
    render(
        job,
        &out,
        |a| {
            let mut s = format!(
                "size {}\nrank {}\ndistributive {}\njoin-irreducibles {}\n",
                a.size,
                a.rank,
                a.distributive,
                a.join_irreducibles.join(" ")
            );
            if let Some(w) = &a.distributivity_witness {
                s.push_str(&format!("witness {}\n", w.join(" ")));
            }
            if let Some(r) = &a.realization {
                for (name, w) in &r.weight {
                    s.push_str(&format!("wt({name}) = {w}\n"));
                }
            }
            s
        },
        true,
    )
}

fn grass_table(job: &Job) -> Result<Outcome> {
    let g = Grassmannian::new(job.m, job.n)?;
    let t = specialized(g.straightening_table()?, &job.q)?;
    let dto = TableDto::from_table(LatticeSpec::grassmannian(job.m, job.n), &t);
    render(
        job,
        &dto,
        |d| {
            let mut s = String::new();
            let side = |terms: &[qasl::io::TermDto]| {
                if terms.is_empty() {
                    return "0".to_string();
                }
                terms
                    .iter()
                    .map(|t| format!("({}) [{}]", t.coeff, t.monomial.join("]*[")))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            for r in &d.straightening {
                s.push_str(&format!(
                    "[{}]*[{}] = {}\n",
                    r.pair.0,
                    r.pair.1,
                    side(&r.terms)
                ));
            }
            for r in &d.commutation {
                let tail = if r.tail.is_empty() {
                    String::new()
                } else {
                    format!(" + {}", side(&r.tail))
                };
                s.push_str(&format!(
                    "[{}]*[{}] = ({}) [{}]*[{}]{tail}\n",
                    r.pair.0, r.pair.1, r.qpow, r.pair.1, r.pair.0
                ));
            }
            s
        },
        true,
    )
}

fn grass_verify(job: &Job) -> Result<Outcome> {
    let g = Grassmannian::new(job.m, job.n)?;
    let asl = verify_symmetric_asl(&g, job.degree.unwrap_or(2));
    let muir = muir_consistency(&g)?;
    let (graded_presentation, graded_detail) =
        match extract_graded(&g.straightening_table()?).and_then(|e| e.presentation()) {
            Ok(p) => {
                let cert = confluence_certify(&p);
                (
                    cert.is_ok(),
                    format!("confluence words checked {}", cert.checked),
                )
            }
            Err(e) => (false, e.to_string()),
        };
    let ok = asl.is_ok() && muir.is_ok();
    let out = GrassVerify {
        asl,
        muir,
        graded_presentation,
        graded_detail,
    };
    render(
        job,
        &out,
        |v| {
            let mut s = String::new();
            for d in &v.asl.degrees {
                s.push_str(&format!(
                    "degree {}: standard {}, rank {}, blocks {}\n",
                    d.degree, d.standard_monomials, d.rank, d.blocks
                ));
            }
            s.push_str(&format!(
                "muir checked {}, failures {}\n",
                v.muir.checked,
                v.muir.failures.len()
            ));
            s.push_str(&format!(
                "graded presentation {} ({})\n",
                v.graded_presentation, v.graded_detail
            ));
            for f in &v.asl.violations {
                s.push_str(&format!("violation: {f}\n"));
            }
            s
        },
        ok,
    )
}

fn richardson(job: &Job) -> Result<RichardsonAlgebra> {
    RichardsonAlgebra::new(job.m, job.n, &job.alpha, &job.beta)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn richardson_hilbert(job: &Job) -> Result<Outcome> {
    let r = richardson(job)?;
    let bound = job.degree.unwrap_or_else(|| r.default_hilbert_degree());
    let h = r.hilbert(Some(bound))?;
    let out = HilbertOut {
        alpha: job.alpha.clone(),
        beta: job.beta.clone(),
        interval: r.interval().labels().to_vec(),
        degree_bound: bound,
        coefficients: strings(&h.coefficients),
        krull: h.krull,
        numerator: format_polynomial(&h.numerator),
        numerator_coefficients: strings(&h.numerator),
        palindromic: h.palindromic,
    };
    render(
        job,
        &out,
        |h| {
            format!(
                "h = {}\nnumerator = {}\nkrull = {}\npalindromic = {}\n",
                h.coefficients.join(", "),
                h.numerator,
                h.krull,
                h.palindromic
            )
        },
        true,
    )
}

fn richardson_gk(job: &Job) -> Result<Outcome> {
    let r = richardson(job)?;
    let d = r.gk_dimensions();
    let gk_dim = r.gk_dim()?;
    let out = GkOut {
        alpha: job.alpha.clone(),
        beta: job.beta.clone(),
        gk_dim,
        formula: d.formula,
        rank_plus_one: d.rank_plus_one,
        coset_difference: d.coset_difference,
    };
    render(job, &out, |g| format!("{}\n", g.gk_dim), true)
}

fn richardson_gorenstein(job: &Job) -> Result<Outcome> {
    let r = richardson(job)?;
    let h = r.hilbert(job.degree)?;
    let out = GorensteinOut {
        alpha: job.alpha.clone(),
        beta: job.beta.clone(),
        indicator: h.palindromic,
        numerator: format_polynomial(&h.numerator),
    };
    render(
        job,
        &out,
        |g| format!("{} ({})\n", g.indicator, g.numerator),
        true,
    )
}

fn degenerate(job: &Job) -> Result<Outcome> {
    let g = Grassmannian::new(job.m, job.n)?;
    let e = extract_graded(&g.straightening_table()?)?;
    let p = e.presentation()?;
    let report = verify_degeneration(&g, job.degree.unwrap_or(2), job.seed)?;
    let l = e.lattice();
    let margins = e
        .margins
        .iter()
        .map(|(&(a, b), &m)| (l.label(a).to_string(), l.label(b).to_string(), m))
        .collect();
    let ok = report.is_ok();
    let out = DegenerateOut {
        presentation: PresentationSpec::from_presentation(
            LatticeSpec::grassmannian(job.m, job.n),
            &p,
        ),
        margins,
        report,
    };
    render(
        job,
        &out,
        |d| {
            let r = &d.report;
            let mut s = format!(
                "filtration checked {}, failures {}\nconfluence checked {}, failures {}\n",
                r.filtration.checked,
                r.filtration.failures.len(),
                r.confluence.checked,
                r.confluence.failures.len()
            );
            for row in &r.dimensions {
                s.push_str(&format!(
                    "degree {} weight {}: filtered {}, census {}\n",
                    row.degree, row.weight, row.filtered, row.census
                ));
            }
            s
        },
        ok,
    )
}

fn toric_nf(job: &Job) -> Result<Outcome> {
    let (p, _) = presentation(job)?;
    let l = p.lattice();
    let word = job
        .word
        .iter()
        .map(|w| l.index_of(w))
        .collect::<Result<Vec<_>>>()?;
    let nf = p.normal_form(&word)?;
    let formal = symbolic_nf(l, p.realization(), &word)?;
    let out = NfOut {
        word: job.word.clone(),
        monomial: nf
            .monomial
            .iter()
            .map(|&x| l.label(x).to_string())
            .collect(),
        scalar: job.q.apply(&nf.scalar)?,
        formal: formal.scalar.display(l),
    };
    render(
        job,
        &out,
        |n| format!("({}) [{}]\n", n.scalar, n.monomial.join("]*[")),
        true,
    )
}

fn toric_certify(job: &Job) -> Result<Outcome> {
    let (p, _) = presentation(job)?;
    p.check_consistency()?;
    let confluence = confluence_certify(&p);
    let ok = confluence.is_ok();
    let out = CertifyOut {
        gk_dim: if ok { Some(gkdim_toric(&p)?) } else { None },
        confluence,
    };
    render(
        job,
        &out,
        |c| {
            let mut s = format!(
                "confluence checked {}, failures {}\n",
                c.confluence.checked,
                c.confluence.failures.len()
            );
            if let Some(d) = c.gk_dim {
                s.push_str(&format!("GKdim {d}\n"));
            }
            for f in &c.confluence.failures {
                s.push_str(&format!("failure: {f}\n"));
            }
            s
        },
        ok,
    )
}

fn toric_torus(job: &Job) -> Result<Outcome> {
    let (p, _) = presentation(job)?;
    let emb = torus_embedding(&p)?;
    let relations = emb.verify(&p)?;
    let l = p.lattice();
    let images = emb
        .images
        .iter()
        .enumerate()
        .map(|(x, m)| {
            Ok(TorusImage {
                element: l.label(x).to_string(),
                scalar: job.q.apply(&m.scalar)?,
                exponents: m.exponents.clone(),
                display: emb.show(m),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ok = relations.is_ok();
    let out = TorusOut {
        irr_plus: emb
            .irr_plus
            .iter()
            .map(|&x| l.label(x).to_string())
            .collect(),
        images,
        relations,
    };
    render(
        job,
        &out,
        |t| {
            let mut s = String::new();
            for im in &t.images {
                s.push_str(&format!("{} -> {}\n", im.element, im.display));
            }
            s.push_str(&format!(
                "relations checked {}, failures {}\n",
                t.relations.checked,
                t.relations.failures.len()
            ));
            s
        },
        ok,
    )
}

fn selftest(job: &Job) -> Result<Outcome> {
    let lines: Vec<SelftestLine> = run_all()
        .into_iter()
        .map(|r| SelftestLine {
            id: r.id,
            title: r.title,
            passed: r.passed,
            detail: r.detail,
        })
        .collect();
    let ok = lines.iter().all(|l| l.passed);
    render(
        job,
        &lines,
        |ls| {
            ls.iter()
                .map(|l| {
                    format!(
                        "[{}] criterion {}: {} ({})\n",
                        if l.passed { "PASS" } else { "FAIL" },
                        l.id,
                        l.title,
                        l.detail
                    )
                })
                .collect()
        },
        ok,
    )
}

/// Writes the body to `job.out` when set; otherwise returns it for stdout.
pub fn deliver(job: &Job, outcome: &Outcome) -> Result<Option<String>> {
    match &job.out {
        Some(path) => {
            fs::write(path, &outcome.body)
                .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            Ok(None)
        }
        None => Ok(Some(outcome.body.clone())),
    }
}
