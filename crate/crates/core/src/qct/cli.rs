use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::catalog::{Catalog, CatalogEntry, EntryKind, Query};
use super::render::{BoundValue, FieldInfo, Output};
use crate::config::Config;
use crate::error::{QctError, Result};
use crate::families::{
    bch_narrow_sense, code_from_defining_set, negacyclic_cs, preparata_like_bi, rs_code,
    simplex_and_c0,
};
use crate::galois::{find_self_dual_basis, ExtensionBasis, Field, Tower};
use crate::lincode::{expand_basis, expand_with_parity, min_distance, CodeRecord, LinearCode};
use crate::polyalg::{defining_set_closure, CodeKind};
use crate::quantum::{
    allone_aqc, audit_table, bound, charpin_family, concat_expand_aqc, concat_formula,
    css_hermitian, css_standard, lemma_bch1, negacyclic_expand_aqc, quantum_concat_params,
    rs_direct_sum_aqc, th_best_family, AqcParams, AuditTarget, BoundKind, Side, ThBestInput,
};

#[derive(Parser, Debug)]
#[command(
    name = "qct",
    version,
    about = "Finite-field code constructions and CSS quantum code parameters"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print audit reports as CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Largest number of codewords a full distance enumeration may visit.
    #[arg(long, global = true, env = "QCT_CAP")]
    cap: Option<u64>,
    /// Worker threads for enumeration and audits.
    #[arg(long, global = true, env = "QCT_THREADS")]
    threads: Option<usize>,
    /// JSON-lines catalog; results are stored there when given.
    #[arg(long, global = true, env = "QCT_CATALOG")]
    catalog: Option<PathBuf>,
    /// Seed for randomized searches.
    #[arg(long, global = true, env = "QCT_SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Describe GF(p^e) and compute (self-)dual bases over a subfield.
    Field(FieldArgs),
    /// Build and transform classical codes.
    Code {
        #[command(subcommand)]
        op: CodeCmd,
    },
    /// Quantum code pipelines.
    Quantum {
        #[command(subcommand)]
        op: QuantumCmd,
    },
    /// Re-derive a table of parameters: table1..table4, examples or all.
    Audit { target: String },
    /// Inspect or edit the catalog.
    Catalog {
        #[command(subcommand)]
        op: CatalogCmd,
    },
}

#[derive(Args, Debug)]
struct FieldArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    e: u32,
    /// Degree of the subfield GF(p^over) the basis is taken over.
    #[arg(long, default_value_t = 1)]
    over: u32,
    /// Basis elements (0, 1, w, w^k, #index) whose trace-dual basis to print.
    #[arg(long, value_delimiter = ',')]
    dual_basis: Option<Vec<String>>,
    /// Search for a self-dual basis.
    #[arg(long)]
    self_dual: bool,
}

/// A code given as a JSON record file, `-` for stdin, or `id:PREFIX` for a
/// catalog entry.
#[derive(Args, Debug)]
struct Input {
    #[arg(long)]
    input: String,
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    Build {
        #[command(subcommand)]
        family: Family,
    },
    /// Compute the minimum distance.
    Distance(Input),
    Dual(Input),
    /// Hermitian dual over GF(q^2).
    Hdual(Input),
    Puncture {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        position: usize,
    },
    /// Append an overall parity symbol.
    Extend(Input),
    /// Expand over a subfield in a chosen basis.
    Expand {
        #[command(flatten)]
        input: Input,
        /// Order of the subfield.
        #[arg(long)]
        sub: u32,
        #[arg(long, value_enum, default_value_t = BasisChoice::SelfDual)]
        basis: BasisChoice,
        /// Add a parity symbol per block (MDS input required).
        #[arg(long)]
        parity: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BasisChoice {
    Polynomial,
    SelfDual,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Reed-Solomon code of length q-1.
    Rs {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
    },
    /// Narrow-sense BCH code.
    Bch {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Binary simplex code of length 2^m - 1.
    Simplex {
        #[arg(long)]
        m: u32,
    },
    /// The code C_0 = simplex + all-ones.
    C0 {
        #[arg(long)]
        m: u32,
    },
    /// Binary cyclic code with defining set Cl(1) u Cl(2^i + 1).
    Preparata {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
    },
    /// MDS negacyclic code C_s over GF(q^2).
    Negacyclic {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
    /// Cyclic (or negacyclic) code from the closure of a set of exponents.
    Cyclic {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        set: Vec<u32>,
        #[arg(long)]
        negacyclic: bool,
    },
}

#[derive(Subcommand, Debug)]
enum QuantumCmd {
    /// CSS from nested codes C1 < C2.
    Css {
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    /// Hermitian CSS from C1^(perp h) < C2.
    Hermitian {
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    /// CSS on <1> < C.
    Allone(Input),
    /// All-ones families.
    ThBest {
        #[command(subcommand)]
        family: ThBestCmd,
    },
    /// Nested binary BCH pair B(d2)^perp < B(d1) of length 2^m - 1.
    Bch1 {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d1: usize,
        #[arg(long)]
        d2: usize,
    },
    /// The two families built on the Preparata-like code B_i.
    Charpin {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
    },
    /// RS direct-sum pair of length 2q - 1.
    RsSum {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
    },
    /// Expanded RS pair with parity, of length (m+1)(q^m - 1).
    Concat {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        /// Only evaluate the parameter formula.
        #[arg(long)]
        formula: bool,
    },
    /// Parameters of the quantum concatenation with an inner [[m+1, k]] code.
    QuantumConcat {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        k: usize,
    },
    /// Expanded negacyclic MDS pair.
    Negacyclic {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: u32,
    },
    /// Evaluate a distance bound.
    Bound {
        #[arg(long, value_enum)]
        kind: BoundChoice,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        delta: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum ThBestCmd {
    /// A narrow-sense BCH code and its puncture.
    Bch {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
    /// A binary self-dual code.
    SelfDual(Input),
    /// The simplex pair.
    Simplex {
        #[arg(long)]
        m: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BoundChoice {
    CarlitzUchiyama,
    SingletonWt,
    Singleton,
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Store a JSON payload from a file (or `-`).
    Put {
        #[arg(long)]
        kind: EntryKind,
        #[arg(long)]
        file: String,
        /// Ids of entries this one was derived from.
        #[arg(long = "input")]
        inputs: Vec<String>,
    },
    Get {
        id: String,
    },
    List,
    Search {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        dz_min: Option<usize>,
        #[arg(long)]
        dx_min: Option<usize>,
    },
}

impl clap::ValueEnum for EntryKind {
    fn value_variants<'a>() -> &'a [Self] {
        &[EntryKind::Classical, EntryKind::Quantum, EntryKind::Report]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            EntryKind::Classical => "classical",
            EntryKind::Quantum => "quantum",
            EntryKind::Report => "report",
        }))
    }
}

enum Failure {
    Usage(String),
    Run(QctError),
}

impl From<QctError> for Failure {
    fn from(e: QctError) -> Self {
        Failure::Run(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Ctx {
    cfg: Config,
    catalog: Option<Catalog>,
    /// Catalog ids of inputs read by the current command.
    used: Vec<String>,
}

impl Ctx {
    fn catalog(&self) -> CliResult<&Catalog> {
        self.catalog
            .as_ref()
            .ok_or_else(|| Failure::Usage("this command needs --catalog PATH".into()))
    }

    fn read_text(&self, source: &str) -> CliResult<String> {
        if source == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| QctError::io("<stdin>", e))?;
            return Ok(s);
        }
        std::fs::read_to_string(source).map_err(|e| QctError::io(source, e).into())
    }

    fn load_code(&mut self, source: &str) -> CliResult<LinearCode> {
        if let Some(id) = source.strip_prefix("id:") {
            let entry = self.catalog()?.get(id)?;
            if entry.kind != EntryKind::Classical {
                return Err(Failure::Usage(format!(
                    "catalog entry {} is a {} record, not a classical code",
                    entry.id, entry.kind
                )));
            }
            let rec: CodeRecord = serde_json::from_value(entry.payload)
                .map_err(|e| QctError::MalformedRecord(e.to_string()))?;
            self.used.push(entry.id);
            return Ok(rec.to_code()?);
        }
        let text = self.read_text(source)?;
        let rec: CodeRecord =
            serde_json::from_str(&text).map_err(|e| QctError::MalformedRecord(e.to_string()))?;
        Ok(rec.to_code()?)
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code: 0 on
/// success, 1 when a construction or lookup fails, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
                return 0;
            }
            let _ = write!(err, "{text}");
            return 2;
        }
    };
    let mut cfg = Config::default();
    if let Some(cap) = cli.cap {
        cfg = cfg.with_cap(cap);
    }
    if let Some(seed) = cli.seed {
        cfg = cfg.with_seed(seed);
    }
    let mut ctx = Ctx {
        cfg,
        catalog: cli.catalog.clone().map(Catalog::open),
        used: Vec::new(),
    };
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli, &mut ctx)),
            Err(e) => Err(Failure::Usage(format!("--threads {n}: {e}"))),
        },
        None => execute(&cli, &mut ctx),
    };
    let output = match result {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
        Err(Failure::Run(e)) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    if let Err(e) = store(&cli, &ctx, &output, err) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    let written = if cli.csv {
        match &output {
            Output::Reports(rs) => rs.iter().try_for_each(|r| match r.to_csv() {
                Ok(csv) => write!(out, "{csv}").map_err(|e| QctError::io("<stdout>", e)),
                Err(e) => Err(e),
            }),
            _ => {
                let _ = writeln!(err, "error: --csv applies to audit reports only");
                return 2;
            }
        }
    } else if cli.json {
        let text = serde_json::to_string_pretty(&output.to_json()).expect("Value serializes");
        writeln!(out, "{text}").map_err(|e| QctError::io("<stdout>", e))
    } else {
        write!(out, "{}", output.human()).map_err(|e| QctError::io("<stdout>", e))
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Records a construction result in the catalog when one is configured.
fn store(cli: &Cli, ctx: &Ctx, output: &Output, err: &mut dyn Write) -> Result<()> {
    let Some(cat) = &ctx.catalog else {
        return Ok(());
    };
    if matches!(cli.cmd, Cmd::Catalog { .. }) {
        return Ok(());
    }
    let mut stored: Vec<CatalogEntry> = Vec::new();
    if let Output::Reports(reports) = output {
        for r in reports {
            let (entry, _) = cat.put(EntryKind::Report, serde_json::to_value(r)?, Vec::new())?;
            let report_id = entry.id.clone();
            stored.push(entry);
            for row in &r.rows {
                if let Some(p) = &row.params {
                    let (e, _) = cat.put(
                        EntryKind::Quantum,
                        serde_json::to_value(p)?,
                        vec![report_id.clone()],
                    )?;
                    stored.push(e);
                }
            }
        }
    }
    for (kind, payload) in output.catalog_payloads() {
        let (e, _) = cat.put(kind, payload, ctx.used.clone())?;
        stored.push(e);
    }
    for e in stored {
        let _ = writeln!(err, "catalog: {} {}", e.kind, e.id);
    }
    Ok(())
}

fn execute(cli: &Cli, ctx: &mut Ctx) -> CliResult<Output> {
    match &cli.cmd {
        Cmd::Field(args) => field_cmd(args, ctx),
        Cmd::Code { op } => code_cmd(op, ctx),
        Cmd::Quantum { op } => quantum_cmd(op, ctx),
        Cmd::Audit { target } => {
            let targets: Vec<AuditTarget> = if target == "all" {
                AuditTarget::ALL.to_vec()
            } else {
                vec![target
                    .parse()
                    .map_err(|e: QctError| Failure::Usage(e.to_string()))?]
            };
            Ok(Output::Reports(
                targets
                    .into_iter()
                    .map(|t| audit_table(t, &ctx.cfg))
                    .collect(),
            ))
        }
        Cmd::Catalog { op } => catalog_cmd(op, ctx),
    }
}

fn field_cmd(args: &FieldArgs, ctx: &Ctx) -> CliResult<Output> {
    let ext = Field::new(args.p, args.e)?;
    let sub = Field::new(args.p, args.over)?;
    let tower = Tower::between(&sub, &ext)?;
    let names = |xs: &[u32]| xs.iter().map(|&x| ext.format(x)).collect::<Vec<_>>();
    let mut info = FieldInfo {
        field: ext.descriptor(),
        order: ext.order(),
        subfield_order: sub.order(),
        degree: tower.degree(),
        basis: None,
        dual_basis: None,
        self_dual_basis: None,
    };
    if let Some(items) = &args.dual_basis {
        let elements = items
            .iter()
            .map(|s| ext.parse(s))
            .collect::<Result<Vec<u32>>>()?;
        let basis = ExtensionBasis::new(&tower, elements)?;
        info.basis = Some(names(basis.elements()));
        info.dual_basis = Some(names(basis.dual().elements()));
    }
    if args.self_dual {
        let found = find_self_dual_basis(&tower, ctx.cfg.seed)?;
        info.self_dual_basis = Some(found.map(|b| names(b.elements())));
    }
    Ok(Output::Field(info))
}

fn code_cmd(op: &CodeCmd, ctx: &mut Ctx) -> CliResult<Output> {
    let cfg = ctx.cfg;
    let code = match op {
        CodeCmd::Build { family } => build_family(family, &cfg)?,
        CodeCmd::Distance(i) => {
            let code = ctx.load_code(&i.input)?;
            let d = min_distance(&code, &cfg)?;
            code.with_distance(d)
        }
        CodeCmd::Dual(i) => {
            let code = ctx.load_code(&i.input)?;
            let p = format!("dual({})", code.provenance());
            code.dual().with_provenance(p)
        }
        CodeCmd::Hdual(i) => {
            let code = ctx.load_code(&i.input)?;
            let p = format!("hdual({})", code.provenance());
            code.hermitian_dual()?.with_provenance(p)
        }
        CodeCmd::Puncture { input, position } => {
            let code = ctx.load_code(&input.input)?;
            code.puncture(*position)?
        }
        CodeCmd::Extend(i) => ctx.load_code(&i.input)?.extend_parity(),
        CodeCmd::Expand {
            input,
            sub,
            basis,
            parity,
        } => {
            let code = ctx.load_code(&input.input)?;
            let sub = Field::of_order(*sub)?;
            let tower = Tower::between(&sub, code.field())?;
            let basis = match basis {
                BasisChoice::Polynomial => ExtensionBasis::polynomial(&tower)?,
                BasisChoice::SelfDual => {
                    find_self_dual_basis(&tower, cfg.seed)?.ok_or_else(|| {
                        Failure::Run(QctError::InvalidBasis(format!(
                            "{} has no self-dual basis over {sub}",
                            code.field()
                        )))
                    })?
                }
            };
            if *parity {
                expand_with_parity(&code, &basis, &cfg)?
            } else {
                expand_basis(&code, &basis)?
            }
        }
    };
    Ok(Output::Code(CodeRecord::from_code(&code)))
}

fn build_family(family: &Family, cfg: &Config) -> Result<LinearCode> {
    match family {
        Family::Rs { q, k } => rs_code(&Field::of_order(*q)?, *k),
        Family::Bch { q, n, delta } => bch_narrow_sense(&Field::of_order(*q)?, *n, *delta),
        Family::Simplex { m } => Ok(simplex_and_c0(*m)?.0),
        Family::C0 { m } => Ok(simplex_and_c0(*m)?.1),
        Family::Preparata { m, i } => preparata_like_bi(*m, *i, cfg),
        Family::Negacyclic { q, n, s } => negacyclic_cs(*q, *n, *s, cfg),
        Family::Cyclic {
            q,
            n,
            set,
            negacyclic,
        } => {
            let kind = if *negacyclic {
                CodeKind::Negacyclic
            } else {
                CodeKind::Cyclic
            };
            let n32 = u32::try_from(*n)
                .map_err(|_| QctError::InvalidParameters(format!("length {n} too large")))?;
            let t = defining_set_closure(set, kind, n32, *q)?;
            code_from_defining_set(&Field::of_order(*q)?, &t)
        }
    }
}

fn quantum_cmd(op: &QuantumCmd, ctx: &mut Ctx) -> CliResult<Output> {
    let cfg = ctx.cfg;
    let p = match op {
        QuantumCmd::Css { c1, c2 } => {
            let (c1, c2) = (ctx.load_code(c1)?, ctx.load_code(c2)?);
            css_standard(&c1, &c2, &cfg)?
        }
        QuantumCmd::Hermitian { c1, c2 } => {
            let (c1, c2) = (ctx.load_code(c1)?, ctx.load_code(c2)?);
            css_hermitian(&c1, &c2, &cfg)?
        }
        QuantumCmd::Allone(i) => allone_aqc(&ctx.load_code(&i.input)?, &cfg)?,
        QuantumCmd::ThBest { family } => {
            let input = match family {
                ThBestCmd::Bch { q, n, delta } => ThBestInput::NarrowSenseBch {
                    q: *q,
                    n: *n,
                    delta: *delta,
                },
                ThBestCmd::SelfDual(i) => ThBestInput::SelfDual(ctx.load_code(&i.input)?),
                ThBestCmd::Simplex { m } => ThBestInput::Simplex { m: *m },
            };
            return Ok(Output::QuantumList(th_best_family(&input, &cfg)?));
        }
        QuantumCmd::Bch1 { m, d1, d2 } => lemma_bch1(*m, *d1, *d2, &cfg)?,
        QuantumCmd::Charpin { m, i } => {
            return Ok(Output::Charpin(Box::new(charpin_family(*m, *i, &cfg)?)))
        }
        QuantumCmd::RsSum { q, k1, k2 } => rs_direct_sum_aqc(*q, *k1, *k2, &cfg)?,
        QuantumCmd::Concat {
            q,
            m,
            k1,
            k2,
            formula,
        } => {
            if *formula {
                if *k2 == 0 || k1 <= k2 {
                    return Err(Failure::Run(QctError::InvalidParameters(
                        "need 1 <= k2 < k1".into(),
                    )));
                }
                let (n, k, z, x) = concat_formula(*q, *m, *k1, *k2);
                AqcParams::new(
                    n,
                    k,
                    *q,
                    Side::bound(z, None),
                    Side::bound(x, None),
                    "concat_formula",
                )?
                .with_inputs([format!("q={q}, m={m}, k1={k1}, k2={k2}")])
            } else {
                concat_expand_aqc(*q, *m, *k1, *k2, &cfg)?
            }
        }
        QuantumCmd::QuantumConcat { q, m, k1, k2, k } => {
            quantum_concat_params(*q, *m, *k1, *k2, *k)?
        }
        QuantumCmd::Negacyclic { q, n, s, m } => negacyclic_expand_aqc(*q, *n, *s, *m, &cfg)?,
        QuantumCmd::Bound {
            kind,
            m,
            delta,
            n,
            k,
        } => {
            let need = |v: Option<u64>, name: &str| {
                v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this bound")))
            };
            let kind = match kind {
                BoundChoice::CarlitzUchiyama => BoundKind::CarlitzUchiyama {
                    m: need(m.map(u64::from), "m")? as u32,
                    delta: need(*delta, "delta")?,
                },
                BoundChoice::SingletonWt => BoundKind::SingletonWt {
                    m: need(m.map(u64::from), "m")? as u32,
                    delta: need(*delta, "delta")?,
                },
                BoundChoice::Singleton => BoundKind::Singleton {
                    n: need(*n, "n")?,
                    k: need(*k, "k")?,
                },
            };
            if let BoundKind::CarlitzUchiyama { m, .. } = kind {
                if !(1..=64).contains(&m) {
                    return Err(Failure::Usage("--m must be in 1..=64".into()));
                }
            }
            return Ok(Output::Bound(BoundValue {
                kind,
                value: bound(kind),
            }));
        }
    };
    Ok(Output::Quantum(p))
}

fn catalog_cmd(op: &CatalogCmd, ctx: &Ctx) -> CliResult<Output> {
    let cat = ctx.catalog()?;
    match op {
        CatalogCmd::Put { kind, file, inputs } => {
            let text = ctx.read_text(file)?;
            let payload: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| QctError::MalformedRecord(e.to_string()))?;
            let (entry, _) = cat.put(*kind, payload, inputs.clone())?;
            Ok(Output::Entry(entry))
        }
        CatalogCmd::Get { id } => Ok(Output::Entry(cat.get(id)?)),
        CatalogCmd::List => Ok(Output::Entries(cat.list()?)),
        CatalogCmd::Search {
            n,
            k,
            q,
            dz_min,
            dx_min,
        } => Ok(Output::Entries(cat.search(&Query {
            n: *n,
            k: *k,
            q: *q,
            dz_min: *dz_min,
            dx_min: *dx_min,
        })?)),
    }
}
