//! Batch driver: the verification suites behind the command line.
//!
//! [`run`] executes one suite and returns a [`Report`] of named checks. An
//! `Err` from `run` is an input problem; a failed check is a [`Record`] with
//! status `fail` and a witness.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::ValueEnum;
use num_complex::Complex64;
use num_traits::One;
use serde::Serialize;

use crate::arch::{
    mellin_whittaker, whittaker_w, z_inf_closed, z_inf_quadrature, ArchScenario, WhittakerQuery,
};
use crate::cosets::{
    bruhat_count, classifier_table, count_identity_defect, coset_audit, verify_matrix_identity, volume_v1,
    volume_v2, BesselDatum, Family, Identity,
};
use crate::error::{invalid, Error, Result};
use crate::exact::{fmt_rational, rat, Rational};
use crate::global::{
    global_z, kappa_infinity, kappa_n_exact, special_value_ratio, theorem3_consistency, v_n, GlobalInput, PrimeEntry,
    TauLocal,
};
use crate::input::{parse_input, InputFile};
use crate::local_field::{splitting_symbol, unit_index, unit_index_oracle, LocalQuadData, SplittingSymbol};
use crate::local_integral::{
    check_local_identity, compare_sides, prefactor, random_scenario, z_closed_form, z_closed_form_factored, Corruption,
    ScenarioData, LocalCheck,
};
use crate::rng::seeded_stream;
use crate::satake::{SatakeParams, SteinbergData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    VerifyLocal,
    VerifyArch,
    VerifyCosets,
    VerifyVolumes,
    Lfactor,
    Global,
    Consistency,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Machine,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub seed: u64,
    pub trials: usize,
    pub order: usize,
    pub tol: f64,
    pub input: Option<PathBuf>,
    pub format: Format,
    /// Restricts the coset audit to one prime.
    pub p: Option<u8>,
    pub pmax: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, seed: 1, trials: 100, order: 25, tol: 1e-6, input: None, format: Format::Table, p: None, pmax: 50 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(invalid("--trials must be at least 1"));
        }
        if self.command == Command::VerifyLocal && self.order < 8 {
            return Err(invalid(format!("--order must be at least 8 for verify-local, got {}", self.order)));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(invalid(format!("--tol must be a positive number, got {}", self.tol)));
        }
        if let Some(p) = self.p {
            if p != 2 && p != 3 {
                return Err(invalid(format!("--p must be 2 or 3, got {p}")));
            }
        }
        if self.pmax < 2 {
            return Err(invalid(format!("--pmax must be at least 2, got {}", self.pmax)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub name: String,
    pub status: Status,
    pub witness: String,
}

impl Record {
    fn new(name: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        Record { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, witness: witness.into() }
    }

    fn error(name: impl Into<String>, e: &Error) -> Self {
        Record::new(name, false, format!("error: {e}"))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: Command,
    /// Sorted by name.
    pub records: Vec<Record>,
}

impl Report {
    fn new(command: Command, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.name.cmp(&b.name));
        Report { command, records }
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(Record::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Machine => {
                for r in &self.records {
                    out.push_str(&serde_json::to_string(r).expect("records serialize"));
                    out.push('\n');
                }
            }
            Format::Table => {
                let width = self.records.iter().map(|r| r.name.chars().count()).max().unwrap_or(0);
                for r in &self.records {
                    let tag = if r.passed() { "PASS" } else { "FAIL" };
                    let pad = width - r.name.chars().count();
                    let _ = writeln!(out, "{tag}  {}{}  {}", r.name, " ".repeat(pad), r.witness);
                }
                let failed = self.failures().count();
                let _ = writeln!(out, "{} checks, {} failed", self.records.len(), failed);
            }
        }
        out
    }
}

fn load_input(cfg: &RunConfig) -> Result<InputFile> {
    match &cfg.input {
        None => Ok(InputFile::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
            parse_input(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
        }
    }
}

/// Runs the suite named by `cfg.command`.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let input = load_input(cfg)?;
    let records = match cfg.command {
        Command::VerifyLocal => verify_local(cfg, &input),
        Command::VerifyArch => verify_arch(cfg, &input),
        Command::VerifyCosets => verify_cosets(cfg)?,
        Command::VerifyVolumes => verify_volumes(),
        Command::Lfactor => lfactor(&input)?,
        Command::Global => global(cfg, &input)?,
        Command::Consistency => consistency(&input),
    };
    Ok(Report::new(cfg.command, records))
}

// verify-local

const LOCAL_PRIMES: [u32; 3] = [2, 3, 5];

const CORRUPTIONS: [Corruption; 8] = [
    Corruption::LambdaPiF,
    Corruption::LambdaPiL,
    Corruption::LambdaPiFOverPiL,
    Corruption::Gamma(0),
    Corruption::Gamma(1),
    Corruption::Gamma(2),
    Corruption::Gamma(3),
    Corruption::Omega,
];

fn mismatch_witness(sc: &ScenarioData, chk: &LocalCheck) -> String {
    match &chk.mismatch {
        Some((i, direct, closed)) => format!("{sc}; t^{i}: direct {direct} vs closed {closed}"),
        None => format!("{sc}; m > 0 terms do not cancel"),
    }
}

fn local_group(seed: u64, stream: u64, symbol: SplittingSymbol, q: u32, trials: usize, order: usize) -> Record {
    let name = format!("local/{symbol}/q={q}");
    let mut rng = seeded_stream(seed, stream);
    for k in 0..trials {
        let sc = match random_scenario(&mut rng, q, symbol) {
            Ok(sc) => sc,
            Err(e) => return Record::error(name, &e),
        };
        match check_local_identity(&sc, order) {
            Ok(chk) if chk.passed() => {}
            Ok(chk) => return Record::new(name, false, format!("trial {k}: {}", mismatch_witness(&sc, &chk))),
            Err(e) => return Record::new(name, false, format!("trial {k}: {sc}; error: {e}")),
        }
    }
    Record::new(name, true, format!("{trials} scenarios agree through t^{order}"))
}

fn local_controls(seed: u64, order: usize) -> Vec<Record> {
    let mut out = Vec::new();
    for (i, symbol) in SplittingSymbol::ALL.into_iter().enumerate() {
        let mut rng = seeded_stream(seed, 100 + i as u64);
        let good = match random_scenario(&mut rng, 3, symbol) {
            Ok(sc) => sc,
            Err(e) => {
                out.push(Record::error(format!("local/control/{symbol}"), &e));
                continue;
            }
        };
        for target in CORRUPTIONS {
            // Λ(ϖ_F) = Λ(ϖ_L)² is not a free parameter when ramified
            if symbol == SplittingSymbol::Ramified && target == Corruption::LambdaPiF {
                continue;
            }
            let name = format!("local/control/{symbol}/{target}");
            let bad = match good.corrupted(target, &rat(2, 1)) {
                Ok(b) => b,
                Err(Error::Missing(_)) => continue,
                Err(e) => {
                    out.push(Record::error(name, &e));
                    continue;
                }
            };
            out.push(match compare_sides(&bad, &good, order) {
                Ok(chk) => match &chk.mismatch {
                    Some((k, direct, closed)) => Record::new(
                        name,
                        true,
                        format!("detected at t^{k}: direct {direct} vs closed {closed}"),
                    ),
                    None => Record::new(name, false, format!("corruption of {target} not detected: {bad}")),
                },
                Err(e) => Record::error(name, &e),
            });
        }
    }
    out
}

fn verify_local(cfg: &RunConfig, input: &InputFile) -> Vec<Record> {
    let mut groups = Vec::new();
    for (i, symbol) in SplittingSymbol::ALL.into_iter().enumerate() {
        for (j, q) in LOCAL_PRIMES.into_iter().enumerate() {
            groups.push(((i * LOCAL_PRIMES.len() + j) as u64, symbol, q));
        }
    }
    let mut records: Vec<Record> = std::thread::scope(|scope| {
        let handles: Vec<_> = groups
            .iter()
            .map(|&(stream, symbol, q)| {
                scope.spawn(move || local_group(cfg.seed, stream, symbol, q, cfg.trials, cfg.order))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("local group thread")).collect()
    });
    records.extend(local_controls(cfg.seed, cfg.order));
    for (i, sc) in input.local_scenarios.iter().enumerate() {
        let name = format!("local/input/{i}");
        records.push(match check_local_identity(sc, cfg.order) {
            Ok(chk) if chk.passed() => Record::new(name, true, format!("{sc}; agrees through t^{}", cfg.order)),
            Ok(chk) => Record::new(name, false, mismatch_witness(sc, &chk)),
            Err(e) => Record::error(name, &e),
        });
    }
    records
}

// verify-arch

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn r(x: f64) -> Complex64 {
    c(x, 0.0)
}

/// `(l, q, ir, D, s, a⁺)` rows of the built-in grid.
pub fn default_arch_grid() -> Vec<ArchScenario> {
    let h = (4.0 * PI).powi(-6);
    let rows: [(u32, Complex64, Complex64, u64, Complex64, Complex64); 13] = [
        (12, r(0.0), r(11.0), 4, r(1.5), r(h)),
        (12, r(0.0), r(11.0), 3, r(1.5), r(h)),
        (12, r(0.0), r(11.0), 4, r(2.0), r(1.0)),
        (12, r(0.0), r(0.4), 4, r(1.0), r(1.0)),
        (12, r(0.0), r(-0.4), 3, r(1.0), r(1.0)),
        (4, r(0.0), r(3.0), 3, r(1.0), r(1.0)),
        (6, r(0.5), c(0.0, 1.2), 7, c(1.0, 0.5), r(1.0)),
        (8, c(0.3, 0.2), c(0.7, 1.1), 8, r(0.8), c(0.5, -1.0)),
        (12, r(0.0), r(5.0), 11, r(1.0), r(1.0)),
        (2, r(0.0), c(0.0, 0.4), 3, r(1.5), r(1.0)),
        (10, r(0.0), r(9.0), 12, r(7.0 / 6.0), r(1.0)),
        (14, r(0.0), r(13.0), 15, r(11.0 / 6.0), r(1.0)),
        (4, r(0.0), r(0.0), 4, r(0.6), r(1.0)),
    ];
    rows.iter()
        .map(|&(l, q, ir, d, s, a)| ArchScenario::new(l, q, ir, d, s, a).expect("grid rows are valid"))
        .collect()
}

fn fmt_c(z: Complex64) -> String {
    format!("{:.12e}{:+.12e}i", z.re, z.im)
}

fn arch_record(name: String, sc: &ArchScenario, tol: f64) -> Record {
    let params = format!("l={} q={} ir={} D={} s={}", sc.l, sc.q_c, sc.ir, sc.d, sc.s);
    let closed = match z_inf_closed(sc) {
        Ok(v) => v,
        Err(e) => return Record::new(name, false, format!("{params}; closed form: {e}")),
    };
    let numeric = match z_inf_quadrature(sc) {
        Ok(v) => v,
        Err(e) => return Record::new(name, false, format!("{params}; quadrature: {e}")),
    };
    let rel = (numeric - closed).norm() / closed.norm();
    Record::new(name, rel <= tol, format!("{params}; closed {} quadrature {} rel {rel:.2e}", fmt_c(closed), fmt_c(numeric)))
}

const MELLIN_TOL: f64 = 1e-8;
const EXACT_W_TOL: f64 = 1e-10;

fn verify_arch(cfg: &RunConfig, input: &InputFile) -> Vec<Record> {
    let scenarios = if input.arch_scenarios.is_empty() { default_arch_grid() } else { input.arch_scenarios.clone() };
    let mut out: Vec<Record> = std::thread::scope(|scope| {
        let handles: Vec<_> = scenarios
            .iter()
            .enumerate()
            .map(|(i, sc)| scope.spawn(move || arch_record(format!("arch/z-inf/{i:02}"), sc, cfg.tol)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("arch thread")).collect()
    });
    for kappa in [0.0, 0.5, -0.5, 1.0, 6.0] {
        for (mu_name, mu) in [("0", r(0.0)), ("i/2", c(0.0, 0.5))] {
            for sigma in [1.0, 2.0, 5.0] {
                let name = format!("arch/mellin/kappa={kappa}/mu={mu_name}/sigma={sigma}");
                out.push(match mellin_whittaker(r(kappa), mu, r(sigma)) {
                    Ok(m) => {
                        let d = m.discrepancy();
                        Record::new(
                            name,
                            d <= MELLIN_TOL,
                            format!("numeric {} closed {} rel {d:.2e}", fmt_c(m.numeric), fmt_c(m.closed)),
                        )
                    }
                    Err(e) => Record::error(name, &e),
                });
            }
        }
    }
    for (mu_name, mu) in [("0", 0.0f64), ("1/2", 0.5), ("3", 3.0), ("11/2", 5.5)] {
        for z in [0.5f64, 2.0, 10.0] {
            let name = format!("arch/w-exact/mu={mu_name}/z={z}");
            let want = r((-z / 2.0).exp() * z.powf(mu + 0.5));
            out.push(match WhittakerQuery::new(r(mu + 0.5), r(mu), z).and_then(|q| whittaker_w(&q)) {
                Ok(got) => {
                    let rel = (got - want).norm() / want.norm();
                    Record::new(name, rel <= EXACT_W_TOL, format!("W {} closed {} rel {rel:.2e}", fmt_c(got), fmt_c(want)))
                }
                Err(e) => Record::error(name, &e),
            });
        }
    }
    out
}

// verify-cosets

fn expected_classifier(datum: &BesselDatum, p: u64, family: Family, m: u32) -> (usize, usize) {
    let p_us = p as usize;
    let total = if family.has_w() { (p_us - 1) * p_us } else { p_us - 1 };
    let in_support = match family {
        Family::I => total,
        Family::II if m > 0 => (p_us - 1) * (p_us - 1),
        Family::II => {
            // units of N(x + α) = x² + (b/c)x + a/c as x runs over 𝔽_p
            let pi = p as i64;
            let c_inv = (1..pi).find(|k| (datum.c * k).rem_euclid(pi) == 1).expect("c is a unit");
            let units = (0..pi)
                .filter(|x| (x * x + datum.b * c_inv * x + datum.a * c_inv).rem_euclid(pi) != 0)
                .count();
            (p_us - 1) * units
        }
        Family::VI if m > 0 => p_us - 1,
        _ => 0,
    };
    (in_support, total)
}

/// `(a, b, c)` for each prime and splitting type; shared with the unit-index check.
type DatumRow = (u64, [(SplittingSymbol, (i64, i64, i64)); 3]);

const DATUMS: [DatumRow; 3] = [
    (
        2,
        [
            (SplittingSymbol::Inert, (1, 1, 1)),
            (SplittingSymbol::Split, (2, 1, 1)),
            (SplittingSymbol::Ramified, (1, 0, 1)),
        ],
    ),
    (
        3,
        [
            (SplittingSymbol::Inert, (1, 0, 1)),
            (SplittingSymbol::Split, (2, 0, 1)),
            (SplittingSymbol::Ramified, (1, 1, 1)),
        ],
    ),
    (
        5,
        [
            (SplittingSymbol::Inert, (1, 1, 1)),
            (SplittingSymbol::Split, (1, 0, 1)),
            (SplittingSymbol::Ramified, (-1, 1, 1)),
        ],
    ),
];

fn verify_cosets(cfg: &RunConfig) -> Result<Vec<Record>> {
    let primes: Vec<u8> = match cfg.p {
        Some(p) => vec![p],
        None => vec![2, 3],
    };
    let mut out: Vec<Record> = std::thread::scope(|scope| {
        let handles: Vec<_> = primes
            .iter()
            .map(|&p| {
                scope.spawn(move || {
                    let name = format!("cosets/audit/p={p}");
                    let pp = u64::from(p);
                    let expected = (pp * pp - 1) * (pp.pow(4) - 1);
                    match coset_audit(p) {
                        Ok(a) => {
                            let ok = a.passed() && a.cosets as u64 == expected && bruhat_count(pp) == expected;
                            let mut w = format!(
                                "{} cosets x |K#| {} = |G| {}; representatives {}, symplectic {}, distinct {}, covering {}",
                                a.cosets,
                                a.subgroup_order,
                                a.group_order,
                                a.representatives,
                                a.all_symplectic,
                                a.pairwise_distinct,
                                a.covers_group
                            );
                            if let Some(x) = &a.witness {
                                let _ = write!(w, "; {x}");
                            }
                            Record::new(name, ok, w)
                        }
                        Err(e) => Record::error(name, &e),
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("coset thread")).collect()
    });

    let defect = count_identity_defect();
    out.push(Record::new(
        "cosets/count-identity",
        defect.is_zero(),
        if defect.is_zero() {
            "(q-1)^2(1+2q+2q^2+2q^3+q^4) = (q^2-1)(q^4-1)".to_string()
        } else {
            format!("difference {defect}")
        },
    ));

    for id in Identity::ALL {
        let name = format!("cosets/identity/{id}");
        out.push(match verify_matrix_identity(id, cfg.trials, cfg.seed) {
            Ok(rep) => match &rep.failure {
                None => Record::new(name, rep.passed(), format!("{} exact trials, {} degenerate redraws", rep.trials, rep.redraws)),
                Some(w) => Record::new(
                    name,
                    false,
                    format!("{}; entry {:?}: lhs {} rhs {}", w.draw, w.entry, w.lhs, w.rhs),
                ),
            },
            Err(e) => Record::error(name, &e),
        });
    }

    for (p, row) in DATUMS {
        for (symbol, (a, b, cc)) in row {
            let datum = BesselDatum::new(a, b, cc)?;
            for m in 0..3 {
                let name = format!("cosets/classifier/p={p}/{symbol}/m={m}");
                let mut bad = Vec::new();
                for cr in classifier_table(&datum, p, m) {
                    let want = expected_classifier(&datum, p, cr.family, m);
                    if (cr.in_support, cr.total) != want {
                        bad.push(format!("{}: {}/{} vs expected {}/{}", cr.family, cr.in_support, cr.total, want.0, want.1));
                    }
                }
                out.push(if bad.is_empty() {
                    Record::new(name, true, format!("8 families match the case table for (a,b,c)=({a},{b},{cc})"))
                } else {
                    Record::new(name, false, bad.join("; "))
                });
            }
        }
    }
    Ok(out)
}

// verify-volumes

fn symbol_local(p: u32, symbol: SplittingSymbol) -> Result<LocalQuadData> {
    let one = Rational::one();
    match symbol {
        SplittingSymbol::Inert => LocalQuadData::inert(p, one),
        SplittingSymbol::Ramified => LocalQuadData::ramified(p, one),
        SplittingSymbol::Split => LocalQuadData::split(p, one.clone(), one),
    }
}

fn verify_volumes() -> Vec<Record> {
    let mut out = Vec::new();
    for symbol in SplittingSymbol::ALL {
        for q in LOCAL_PRIMES {
            let name = format!("volumes/cancellation/{symbol}/q={q}");
            let local = match symbol_local(q, symbol) {
                Ok(l) => l,
                Err(e) => {
                    out.push(Record::error(name, &e));
                    continue;
                }
            };
            let qr = rat(q as i64, 1);
            let mut failure = None;
            'scan: for l in 0..=10 {
                for m in 1..=10 {
                    let v1 = volume_v1(&local, l, m);
                    let v2 = match volume_v2(&local, l, m) {
                        Ok(v) => v,
                        Err(e) => {
                            failure = Some(format!("l={l} m={m}: {e}"));
                            break 'scan;
                        }
                    };
                    let diff = &v1 - &v2 / &qr;
                    if diff != Rational::from_integer(0.into()) {
                        failure = Some(format!(
                            "l={l} m={m}: V1={} V2={} V1-V2/q={}",
                            fmt_rational(&v1),
                            fmt_rational(&v2),
                            fmt_rational(&diff)
                        ));
                        break 'scan;
                    }
                }
            }
            out.push(match failure {
                None => Record::new(name, true, "V1 - V2/q = 0 for l <= 10, 1 <= m <= 10"),
                Some(w) => Record::new(name, false, w),
            });
        }
    }
    for (p, row) in DATUMS {
        for (symbol, (a, b, cc)) in row {
            let name = format!("volumes/unit-index/p={p}/{symbol}");
            let d = b * b - 4 * a * cc;
            match splitting_symbol(d, p) {
                Ok(s) if s == symbol => {}
                Ok(s) => {
                    out.push(Record::new(name, false, format!("(a,b,c)=({a},{b},{cc}) gives {s}, not {symbol}")));
                    continue;
                }
                Err(e) => {
                    out.push(Record::error(name, &e));
                    continue;
                }
            }
            let local = match symbol_local(p as u32, symbol) {
                Ok(l) => l,
                Err(e) => {
                    out.push(Record::error(name, &e));
                    continue;
                }
            };
            let mut values = Vec::new();
            let mut failure = None;
            for m in 0..=3 {
                let formula = unit_index(&local, m);
                match unit_index_oracle(a, b, cc, p, m) {
                    Ok(n) if formula == Rational::from_integer(n.into()) => values.push(n.to_string()),
                    Ok(n) => {
                        failure = Some(format!("m={m}: formula {} oracle {n}", fmt_rational(&formula)));
                        break;
                    }
                    Err(e) => {
                        failure = Some(format!("m={m}: {e}"));
                        break;
                    }
                }
            }
            out.push(match failure {
                None => Record::new(name, true, format!("(a,b,c)=({a},{b},{cc}) index for m=0..3: {}", values.join(", "))),
                Some(w) => Record::new(name, false, w),
            });
        }
    }
    out
}

// lfactor

/// `q = 2` inert with every parameter 1.
pub fn trivial_inert_scenario() -> ScenarioData {
    let one = || Rational::one();
    ScenarioData::new(
        LocalQuadData::inert(2, one()).expect("valid"),
        SatakeParams::new(one(), one(), one()).expect("valid"),
        SteinbergData::new(one()).expect("valid"),
    )
    .expect("compatible")
}

fn lfactor(input: &InputFile) -> Result<Vec<Record>> {
    let scenarios = if input.local_scenarios.is_empty() {
        vec![trivial_inert_scenario()]
    } else {
        input.local_scenarios.clone()
    };
    let mut out = Vec::new();
    for (i, sc) in scenarios.iter().enumerate() {
        let name = format!("lfactor/{i}");
        let factored = z_closed_form_factored(sc)?;
        let expanded = z_closed_form(sc)?;
        let ok = factored.to_rational_function()?.reduced() == expanded;
        out.push(Record::new(name, ok, format!("{sc}; Z = {factored}")));
    }
    Ok(out)
}

// global

fn global(cfg: &RunConfig, input: &InputFile) -> Result<Vec<Record>> {
    let gi = input.global_input.as_ref().ok_or_else(|| Error::Missing("global_input in --input".into()))?;
    let points = if input.global_s.is_empty() {
        vec![r(f64::from(gi.l) / 6.0 - 0.5)]
    } else {
        input.global_s.clone()
    };
    let mut out = Vec::new();
    for (i, &s) in points.iter().enumerate() {
        let name = format!("global/z/{i}");
        let z = global_z(gi, s, cfg.pmax)?;
        let mut w = format!(
            "s={s} Z={} kappa_inf={} kappa_N={} euler={} pmax={} tail<={:.2e}",
            fmt_c(z.value),
            fmt_c(z.kappa_infinity),
            fmt_c(z.kappa_n),
            fmt_c(z.euler.value),
            z.euler.pmax,
            z.euler.tail_bound
        );
        for warning in &z.euler.warnings {
            let _ = write!(w, "; warning: {warning}");
        }
        let _ = write!(w, "; {}", z.note);
        out.push(Record::new(name, z.value.re.is_finite() && z.value.im.is_finite(), w));
    }
    let holomorphic = (gi.ir - r(f64::from(gi.l) - 1.0)).norm() <= 1e-12;
    if gi.petersson_phi.is_some() && gi.petersson_psi.is_some() && holomorphic {
        let sv = special_value_ratio(gi, cfg.pmax)?;
        out.push(Record::new(
            "global/special-value",
            sv.ratio.re.is_finite() && sv.ratio.im.is_finite(),
            format!(
                "ratio={} L={} pmax={} tail<={:.2e}; {}",
                fmt_c(sv.ratio),
                fmt_c(sv.l_value.value),
                sv.l_value.pmax,
                sv.l_value.tail_bound,
                sv.note
            ),
        ));
    }
    Ok(out)
}

// consistency

const CONSISTENCY_TOL: f64 = 1e-9;
const CROSS_TOL: f64 = 1e-10;

fn one_class_input(l: u32, disc: u64) -> GlobalInput {
    GlobalInput {
        l,
        l1: i64::from(l),
        disc,
        level: 1,
        lambda_classvals: vec![r(1.0)],
        fourier_classvals: vec![r(1.0)],
        a1: r((4.0 * PI).powf(-f64::from(l) / 2.0)),
        ir: r(f64::from(l) - 1.0),
        primes: Vec::new(),
        petersson_phi: None,
        petersson_psi: None,
    }
}

fn to_c(x: &Rational) -> Complex64 {
    r(crate::exact::rational_to_f64(x))
}

/// A Steinberg scenario at 2 together with the matching global data.
fn steinberg_pair(symbol: SplittingSymbol) -> Result<(ScenarioData, GlobalInput)> {
    let (u0, u1, u2) = (rat(1, 2), rat(3, 1), rat(3, 1));
    let sat = SatakeParams::new(u0, u1, u2)?;
    let omega_pi = sat.omega_pi().clone();
    let (local, disc, lambda_l) = match symbol {
        SplittingSymbol::Inert => (LocalQuadData::inert(2, omega_pi)?, 3, None),
        SplittingSymbol::Ramified => (LocalQuadData::ramified(2, rat(3, 2))?, 4, Some(rat(3, 2))),
        SplittingSymbol::Split => {
            let l = rat(3, 1);
            let rest = &omega_pi / &l;
            (LocalQuadData::split(2, l.clone(), rest)?, 7, Some(l))
        }
    };
    let big_omega = rat(-1, 1);
    let sc = ScenarioData::new(local, sat.clone(), SteinbergData::new(big_omega.clone())?)?;
    let [a, b, cc] = sat.u();
    let entry = PrimeEntry {
        p: 2,
        symbol,
        lambda_pi_l: lambda_l.as_ref().map(to_c),
        satake: [to_c(a), to_c(b), to_c(cc)],
        tau: TauLocal::Steinberg { omega: crate::exact::rational_to_f64(&big_omega) },
    };
    let mut gi = one_class_input(12, disc);
    gi.level = 2;
    gi.fourier_classvals = vec![c(0.7, -0.2)];
    gi.primes = vec![entry];
    Ok((sc, gi.validated()?))
}

fn consistency(input: &InputFile) -> Vec<Record> {
    let mut out = Vec::new();
    let base = input.global_input.clone();
    for l in (12..=40).step_by(2) {
        let name = format!("consistency/centre-constant/l={l}");
        let gi = match &base {
            Some(g) => GlobalInput { l, ..g.clone() },
            None => one_class_input(l, 4),
        };
        out.push(match theorem3_consistency(&gi) {
            Ok(rep) => Record::new(
                name,
                rep.passed(CONSISTENCY_TOL),
                format!(
                    "kappa_inf={} C*pi^(4-2l)={} rel {:.2e}",
                    fmt_c(rep.kappa_infinity),
                    fmt_c(rep.constant_side),
                    rep.relative_error
                ),
            ),
            Err(e) => Record::error(name, &e),
        });
    }

    for p in LOCAL_PRIMES {
        for symbol in SplittingSymbol::ALL {
            let name = format!("consistency/kappa-n/p={p}/{symbol}");
            let local = match symbol_local(p, symbol) {
                Ok(l) => l,
                Err(e) => {
                    out.push(Record::error(name, &e));
                    continue;
                }
            };
            let pre = prefactor(&local);
            let mut failure = None;
            for six_s in [-3i64, 1, 2, 3, 5, 9] {
                let qr = rat(p as i64, 1);
                let zeta_inv = Rational::one() - crate::exact::rational_pow(&qr, -six_s - 1);
                let want = &pre / &zeta_inv;
                match kappa_n_exact(&[(u64::from(p), symbol)], six_s) {
                    Ok(got) if got == want => {}
                    Ok(got) => {
                        failure = Some(format!("6s={six_s}: kappa_N={} prefactor relation {}", fmt_rational(&got), fmt_rational(&want)));
                        break;
                    }
                    Err(e) => {
                        failure = Some(format!("6s={six_s}: {e}"));
                        break;
                    }
                }
            }
            out.push(match failure {
                None => Record::new(name, true, format!("exact at 6s in {{-3,1,2,3,5,9}}; prefactor {}", fmt_rational(&pre))),
                Some(w) => Record::new(name, false, w),
            });
        }
    }

    out.push(match v_n(2) {
        Ok(v) => Record::new("consistency/v-n/N=2", v == rat(1, 45), format!("V_N = {}", fmt_rational(&v))),
        Err(e) => Record::error("consistency/v-n/N=2", &e),
    });

    for symbol in SplittingSymbol::ALL {
        let name = format!("consistency/global-vs-local/{symbol}");
        let (sc, gi) = match steinberg_pair(symbol) {
            Ok(x) => x,
            Err(e) => {
                out.push(Record::error(name, &e));
                continue;
            }
        };
        let closed = match z_closed_form(&sc) {
            Ok(f) => f,
            Err(e) => {
                out.push(Record::error(name, &e));
                continue;
            }
        };
        let mut worst: f64 = 0.0;
        let mut err = None;
        for s in [r(1.5), c(1.2, 0.7), r(2.0 / 3.0)] {
            let t = (-3.0 * s * 2f64.ln()).exp();
            match (global_z(&gi, s, 2), kappa_infinity(&gi, s)) {
                (Ok(z), Ok(ki)) => {
                    let want = ki * closed.eval_complex(t);
                    worst = worst.max((z.value - want).norm() / want.norm());
                }
                (Err(e), _) | (_, Err(e)) => {
                    err = Some(e);
                    break;
                }
            }
        }
        out.push(match err {
            Some(e) => Record::error(name, &e),
            None => Record::new(name, worst <= CROSS_TOL, format!("{sc}; worst rel {worst:.2e} over 3 points")),
        });
    }

    for (i, sc) in default_arch_grid().iter().filter(|sc| sc.q_c == r(0.0)).enumerate() {
        let name = format!("consistency/kappa-inf/{i:02}");
        let mut gi = one_class_input(sc.l, sc.d);
        gi.ir = sc.ir;
        gi.fourier_classvals = vec![c(0.3, 1.1)];
        let a = gi.fourier_classvals[0];
        let arch = ArchScenario { a_plus: gi.c1(), ..*sc };
        out.push(match (kappa_infinity(&gi, sc.s), z_inf_closed(&arch)) {
            (Ok(k), Ok(z)) => {
                let want = a.conj() * z;
                let rel = (k - want).norm() / want.norm();
                Record::new(name, rel <= CROSS_TOL, format!("kappa_inf {} conj(a) Z_inf {} rel {rel:.2e}", fmt_c(k), fmt_c(want)))
            }
            (Err(e), _) | (_, Err(e)) => Record::error(name, &e),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut cfg = RunConfig::new(Command::VerifyLocal);
        cfg.order = 7;
        assert!(run(&cfg).is_err());
        cfg.order = 25;
        cfg.trials = 0;
        assert!(run(&cfg).is_err());
        let mut cfg = RunConfig::new(Command::VerifyCosets);
        cfg.p = Some(5);
        assert!(run(&cfg).is_err());
    }

    #[test]
    fn global_needs_input() {
        assert!(matches!(run(&RunConfig::new(Command::Global)), Err(Error::Missing(_))));
    }

    #[test]
    fn lfactor_default() {
        let rep = run(&RunConfig::new(Command::Lfactor)).unwrap();
        assert!(rep.passed());
        assert!(rep.records[0].witness.ends_with("Z = (1/15)(1 - 1/8*t^2)/(1 - 1/2*t)^4"), "{}", rep.records[0].witness);
    }

    #[test]
    fn volumes_and_consistency_pass() {
        for cmd in [Command::VerifyVolumes, Command::Consistency] {
            let rep = run(&RunConfig::new(cmd)).unwrap();
            let bad: Vec<_> = rep.failures().collect();
            assert!(bad.is_empty(), "{bad:#?}");
        }
    }

    #[test]
    fn local_small_deterministic() {
        let mut cfg = RunConfig::new(Command::VerifyLocal);
        cfg.trials = 2;
        cfg.order = 12;
        cfg.format = Format::Machine;
        let a = run(&cfg).unwrap();
        let b = run(&cfg).unwrap();
        assert!(a.passed(), "{:#?}", a.failures().collect::<Vec<_>>());
        assert_eq!(a.render(Format::Machine), b.render(Format::Machine));
    }
}
