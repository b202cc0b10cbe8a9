use std::path::PathBuf;

use nilgrade::cache;
use nilgrade::graded::big_to_json;
use nilgrade::Error;
use nilgrade::{
    freudenthal_m, kostant_m, reflection_k, reflection_length_theta, tilting_euler_a2, Character,
    Family, GradedEngine, ModuleKind, PartitionTable, RootSystem, RootSystemId, Variety, Weight,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::output::{render, Doc};
use crate::{
    CacheAction, Cli, Command, Failure, GlobalOpts, KindArg, MethodArg, TypeOpts, VarietyArg,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Rendered output plus any invariant violations found by `--check`.
pub struct Outcome {
    pub text: String,
    pub violations: Vec<String>,
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    let (doc, violations) = match &cli.command {
        Command::Kconst { family, rank, all } => kconst(family.as_deref(), *rank, *all, g)?,
        Command::Roots { ty } => (roots(ty)?, Vec::new()),
        Command::Graded {
            ty,
            variety,
            lambda,
            sweep,
            max_degree,
        } => graded(ty, *variety, lambda.as_deref(), *sweep, *max_degree, g)?,
        Command::Cohomology {
            ty,
            kind,
            sweep,
            max_i,
        } => cohomology(ty, *kind, *sweep, *max_i, g)?,
        Command::TiltingExample => tilting_example()?,
        Command::Mult {
            ty,
            lambda,
            mu,
            method,
        } => mult(ty, lambda, mu, *method, g)?,
        Command::Hilbert {
            ty,
            variety,
            max_degree,
        } => hilbert(ty, *variety, *max_degree, g)?,
        Command::Cache { action } => (cache_cmd(*action, g)?, Vec::new()),
    };
    let violations = if g.check { violations } else { Vec::new() };
    Ok(Outcome {
        text: render(&doc, g.format),
        violations,
    })
}

fn system(ty: &TypeOpts) -> Result<RootSystem, Failure> {
    let family: Family = ty.family.parse()?;
    Ok(RootSystem::build(RootSystemId::new(family, ty.rank)?)?)
}

fn parse_weight(rs: &RootSystem, s: &str, what: &str) -> Result<Weight, Failure> {
    let w: Weight = s
        .parse()
        .map_err(|_| Failure::Usage(format!("cannot parse {what} `{s}`")))?;
    if w.rank() != rs.rank() {
        return Err(Failure::Usage(format!(
            "{what} `{s}` has {} coordinates, {} needs {}",
            w.rank(),
            rs.id(),
            rs.rank()
        )));
    }
    Ok(w)
}

fn cache_dir(g: &GlobalOpts) -> PathBuf {
    g.cache_dir.clone().unwrap_or_else(cache::default_cache_dir)
}

fn partition_table(rs: &RootSystem, g: &GlobalOpts) -> PartitionTable {
    let table = PartitionTable::new(rs);
    if !g.no_cache {
        if let Err(e) = cache::load(&table, &cache_dir(g)) {
            eprintln!("warning: ignoring cache: {e}");
        }
    }
    table
}

fn persist(table: &PartitionTable, g: &GlobalOpts) {
    if !g.no_cache {
        if let Err(e) = cache::save(table, &cache_dir(g)) {
            eprintln!("warning: cache not written: {e}");
        }
    }
}

fn engine(ty: &TypeOpts, g: &GlobalOpts) -> Result<GradedEngine, Failure> {
    let rs = system(ty)?;
    let table = partition_table(&rs, g);
    Ok(GradedEngine::with_table(rs, g.weyl_cap, table)?)
}

fn type_json(id: RootSystemId) -> Value {
    json!({"family": id.family().to_string(), "rank": id.rank()})
}

fn kconst(
    family: Option<&str>,
    rank: Option<usize>,
    all: bool,
    _g: &GlobalOpts,
) -> Result<(Doc, Vec<String>), Failure> {
    let ids = if all {
        RootSystemId::classical_up_to(8)
    } else {
        match (family, rank) {
            (Some(f), Some(r)) => vec![RootSystemId::new(f.parse()?, r)?],
            _ => {
                return Err(Failure::Usage(
                    "kconst needs --family and --rank, or --all".into(),
                ))
            }
        }
    };
    let mut doc = Doc::new(&["type", "reflection_length", "k"]);
    doc.comment("k: the length of the reflection in the dominant short root is 2k-1");
    let mut entries = Vec::new();
    let mut violations = Vec::new();
    for id in ids {
        let rs = RootSystem::build(id)?;
        let len = reflection_length_theta(&rs);
        let k = reflection_k(&rs)?;
        if k.reflection_length() as usize != len {
            violations.push(format!(
                "{id}: 2k-1 = {} but length is {len}",
                k.reflection_length()
            ));
        }
        doc.row(vec![id.to_string(), len.to_string(), k.to_string()]);
        entries.push(json!({
            "type": id.to_string(),
            "family": id.family().to_string(),
            "rank": id.rank(),
            "reflection_length": len,
            "k": k.value(),
        }));
    }
    doc.json = json!({"schema_version": SCHEMA_VERSION, "entries": entries});
    Ok((doc, violations))
}

fn roots(ty: &TypeOpts) -> Result<Doc, Failure> {
    let rs = system(ty)?;
    let mut doc = Doc::new(&["root", "root_coords", "height"]);
    doc.comment(&format!(
        "{}: Bourbaki numbering; weights in fundamental-weight coordinates",
        rs.id()
    ));
    doc.comment(&format!(
        "rho = {}, theta_short = {}, theta_long = {}",
        rs.rho(),
        rs.theta_short(),
        rs.theta_long()
    ));
    for (a, r) in rs.positive_roots().iter().zip(rs.positive_root_coords()) {
        doc.row(vec![a.to_string(), r.to_string(), r.height().to_string()]);
    }
    doc.json = serde_json::to_value(rs.to_json()).map_err(Error::from)?;
    Ok(doc)
}

fn variety(v: VarietyArg) -> Variety {
    match v {
        VarietyArg::Nilcone => Variety::Nilcone,
        VarietyArg::Subregular => Variety::Subregular,
    }
}

fn graded(
    ty: &TypeOpts,
    variety_arg: VarietyArg,
    lambda: Option<&str>,
    sweep: Option<u32>,
    max_degree: Option<u32>,
    g: &GlobalOpts,
) -> Result<(Doc, Vec<String>), Failure> {
    let e = engine(ty, g)?;
    let rs = e.root_system();
    let v = variety(variety_arg);
    let weights = match (lambda, sweep) {
        (Some(s), None) => {
            let w = parse_weight(rs, s, "lambda")?;
            if !w.is_dominant() {
                return Err(Failure::Engine(Error::NonDominant(w)));
            }
            vec![w]
        }
        (None, Some(n)) => e.sweep(n),
        _ => {
            return Err(Failure::Usage(
                "graded needs exactly one of --lambda or --sweep".into(),
            ))
        }
    };

    let results: Vec<_> = {
        use rayon::prelude::*;
        weights
            .par_iter()
            .map(|l| -> Result<_, Error> {
                let c = e.graded(v, l)?;
                let ch = Character::new(rs, l)?;
                let m0 = ch.multiplicity(rs, &Weight::zero(rs.rank()));
                let expected = match v {
                    Variety::Nilcone => m0,
                    Variety::Subregular => m0 - ch.multiplicity(rs, rs.theta_short()),
                };
                let exact = if g.check {
                    let d = e.nilcone(l)?;
                    let a = e.wall(l)?;
                    let t = e.subregular(l)?;
                    let top = d.max_degree().unwrap_or(0).max(a.max_degree().unwrap_or(0)) as i64;
                    (0..=top).all(|n| d.get(n) == t.get(n) + a.get(n))
                } else {
                    true
                };
                Ok((l.clone(), c, expected, exact))
            })
            .collect::<Result<_, _>>()?
    };
    persist(e.table(), g);

    let (symbol, what, check_col) = match v {
        Variety::Nilcone => ("d_n", "nilpotent cone", "m(0)"),
        Variety::Subregular => ("t_n", "subregular orbit closure", "m(0)-m(theta)"),
    };
    let mut doc = Doc::new(&["lambda", "degrees", "total", check_col]);
    doc.csv_header = vec![
        "lambda".into(),
        "n".into(),
        "mult".into(),
        "total".into(),
        "expected".into(),
    ];
    doc.comment(&format!(
        "{}: {symbol}(lambda) for the {what}, k = {}",
        rs.id(),
        e.k()
    ));
    doc.comment("degree n is polynomial degree (cohomological degree 2n)");

    let mut entries = Vec::new();
    let mut violations = Vec::new();
    for (l, c, expected, exact) in results {
        let shown: Vec<(usize, &BigInt)> = c
            .iter()
            .filter(|(n, _)| max_degree.is_none_or(|m| *n as u32 <= m))
            .collect();
        let degrees = shown
            .iter()
            .map(|(n, m)| format!("{n}:{m}"))
            .collect::<Vec<_>>()
            .join(", ");
        let total = c.total();
        doc.row(vec![
            l.to_string(),
            format!("{{{degrees}}}"),
            total.to_string(),
            expected.to_string(),
        ]);
        for (n, m) in &shown {
            doc.csv_rows.push(vec![
                l.to_string(),
                n.to_string(),
                m.to_string(),
                total.to_string(),
                expected.to_string(),
            ]);
        }
        if total != expected {
            violations.push(format!("{l}: total {total} != expected {expected}"));
        }
        if !exact {
            violations.push(format!("{l}: d_n != t_n + a_n"));
        }
        entries.push(json!({
            "lambda": l.coords(),
            "values": shown.iter().map(|(n, m)| json!({"n": n, "mult": big_to_json(m)})).collect::<Vec<_>>(),
            "total": big_to_json(&total),
            "expected_total": big_to_json(&expected),
        }));
    }
    let mut j = type_json(rs.id());
    j["schema_version"] = json!(SCHEMA_VERSION);
    j["variety"] = json!(v.to_string());
    j["k"] = json!(e.k().value());
    j["degree_convention"] = json!("polynomial degree n (cohomological degree 2n)");
    j["entries"] = json!(entries);
    doc.json = j;
    Ok((doc, violations))
}

fn module_kind(k: KindArg) -> ModuleKind {
    match k {
        KindArg::Trivial => ModuleKind::Trivial,
        KindArg::InducedWall => ModuleKind::InducedWall,
        KindArg::Tilting => ModuleKind::Tilting,
        KindArg::Weyl => ModuleKind::Weyl,
        KindArg::Simple => ModuleKind::Simple,
    }
}

fn cohomology(
    ty: &TypeOpts,
    kind_arg: KindArg,
    sweep: u32,
    max_i: usize,
    g: &GlobalOpts,
) -> Result<(Doc, Vec<String>), Failure> {
    let e = engine(ty, g)?;
    let kind = module_kind(kind_arg);
    let table = e.cohomology_table(kind, sweep, max_i)?;
    persist(e.table(), g);

    let parity_bad = table.parity_violations();
    let parity_text = match kind.vanishing_parity() {
        Some(p) => format!(
            "{} degrees vanish: {}",
            if p == 0 { "even" } else { "odd" },
            if parity_bad.is_empty() {
                "ok"
            } else {
                "VIOLATED"
            }
        ),
        None => "no parity vanishing expected".to_string(),
    };

    let mut violations: Vec<String> = parity_bad
        .iter()
        .map(|i| format!("degree {i} should vanish for {kind}"))
        .collect();
    if g.check && kind == ModuleKind::Weyl {
        // Odd rows repeat the trivial module's even rows.
        let triv = e.cohomology_table(ModuleKind::Trivial, sweep, max_i)?;
        for i in (1..=max_i).step_by(2) {
            if table.row(i).map(|r| &r.entries) != triv.row(i - 1).map(|r| &r.entries) {
                violations.push(format!(
                    "weyl degree {i} differs from trivial degree {}",
                    i - 1
                ));
            }
        }
    }

    let mut doc = Doc::new(&["i", "entries"]);
    doc.csv_header = vec!["i".into(), "lambda".into(), "mult".into()];
    doc.comment(&format!(
        "{}: cohomology of the {kind} module, dominant lambda <= {sweep}*theta, k = {}",
        e.root_system().id(),
        e.k()
    ));
    doc.comment("i is the cohomological degree; polynomial degree n sits in degree 2n");
    doc.comment(&format!("parity check: {parity_text}"));
    for r in &table.rows {
        let entries = r
            .entries
            .iter()
            .map(|(l, m)| format!("L{l}:{m}"))
            .collect::<Vec<_>>()
            .join(" ");
        doc.row(vec![r.degree.to_string(), entries]);
        for (l, m) in &r.entries {
            doc.csv_rows
                .push(vec![r.degree.to_string(), l.to_string(), m.to_string()]);
        }
    }
    let mut j = table.to_json();
    j["max_i"] = json!(max_i);
    j["parity_check"] = json!({
        "vanishing_parity": kind.vanishing_parity().map(|p| if p == 0 { "even" } else { "odd" }),
        "ok": parity_bad.is_empty(),
    });
    doc.json = j;
    Ok((doc, violations))
}

fn tilting_example() -> Result<(Doc, Vec<String>), Failure> {
    let rs = RootSystem::build(RootSystemId::new(Family::A, 2)?)?;
    let bound = Weight::new(vec![3, 3]);
    let mut doc = Doc::new(&["lambda", "m(3w2)", "m(0)", "m(w1+w2)", "euler"]);
    doc.comment("A2 tilting module: multiplicity of L(lambda) in the Euler characteristic");
    doc.comment("of its cohomology, m(3w2) + m(0) - 2 m(w1+w2)");
    let mut entries = Vec::new();
    let mut negative = Vec::new();
    for l in rs.dominant_weights_below(&bound) {
        let ch = Character::new(&rs, &l)?;
        let m = |c: [i64; 2]| ch.multiplicity(&rs, &Weight::new(c.to_vec()));
        let euler = tilting_euler_a2(&rs, &l)?;
        if euler < BigInt::from(0) {
            negative.push(l.to_string());
        }
        doc.row(vec![
            l.to_string(),
            m([0, 3]).to_string(),
            m([0, 0]).to_string(),
            m([1, 1]).to_string(),
            euler.to_string(),
        ]);
        entries.push(json!({"lambda": l.coords(), "euler": big_to_json(&euler)}));
    }
    let sign_change = !negative.is_empty();
    doc.comment(&if sign_change {
        format!(
            "sign change: negative at {}; cohomology is not concentrated in one parity",
            negative.join(" ")
        )
    } else {
        "no sign change".to_string()
    });
    doc.json = json!({
        "schema_version": SCHEMA_VERSION,
        "family": "A",
        "rank": 2,
        "entries": entries,
        "sign_change": sign_change,
    });
    Ok((doc, Vec::new()))
}

fn mult(
    ty: &TypeOpts,
    lambda: &str,
    mu: &str,
    method: MethodArg,
    g: &GlobalOpts,
) -> Result<(Doc, Vec<String>), Failure> {
    let rs = system(ty)?;
    let l = parse_weight(&rs, lambda, "lambda")?;
    let m = parse_weight(&rs, mu, "mu")?;
    let need_kostant = method == MethodArg::Kostant || g.check;
    let fr = freudenthal_m(&rs, &l, &m)?;
    let ko = if need_kostant {
        let weyl = nilgrade::WeylGroup::enumerate(&rs, g.weyl_cap)?;
        let table = partition_table(&rs, g);
        let v = kostant_m(&rs, &weyl, &table, &l, &m)?;
        persist(&table, g);
        Some(v)
    } else {
        None
    };
    let value = match method {
        MethodArg::Freudenthal => fr.clone(),
        MethodArg::Kostant => ko.clone().unwrap(),
    };
    let mut violations = Vec::new();
    if let Some(k) = &ko {
        if *k != fr {
            violations.push(format!("freudenthal {fr} != kostant {k}"));
        }
    }
    let method_name = match method {
        MethodArg::Freudenthal => "freudenthal",
        MethodArg::Kostant => "kostant",
    };
    let mut doc = Doc::new(&["lambda", "mu", "mult"]);
    doc.comment(&format!(
        "{}: weight multiplicity m_lambda(mu) ({method_name})",
        rs.id()
    ));
    doc.row(vec![l.to_string(), m.to_string(), value.to_string()]);
    let mut j = type_json(rs.id());
    j["schema_version"] = json!(SCHEMA_VERSION);
    j["lambda"] = json!(l.coords());
    j["mu"] = json!(m.coords());
    j["method"] = json!(method_name);
    j["mult"] = big_to_json(&value);
    doc.json = j;
    Ok((doc, violations))
}

fn hilbert(
    ty: &TypeOpts,
    variety_arg: VarietyArg,
    max_degree: u32,
    g: &GlobalOpts,
) -> Result<(Doc, Vec<String>), Failure> {
    let e = engine(ty, g)?;
    let v = variety(variety_arg);
    let series = e.hilbert_series(v, max_degree)?;
    persist(e.table(), g);
    let mut doc = Doc::new(&["n", "dim"]);
    doc.comment(&format!(
        "{}: dimensions of the degree-n pieces of the coordinate ring ({v})",
        e.root_system().id()
    ));
    for (n, d) in series.iter().enumerate() {
        doc.row(vec![n.to_string(), d.to_string()]);
    }
    let mut j = type_json(e.root_system().id());
    j["schema_version"] = json!(SCHEMA_VERSION);
    j["variety"] = json!(v.to_string());
    j["coefficients"] = json!(series.iter().map(big_to_json).collect::<Vec<_>>());
    doc.json = j;
    let violations = series
        .iter()
        .enumerate()
        .filter(|(_, d)| **d < BigInt::from(0))
        .map(|(n, d)| format!("negative dimension {d} in degree {n}"))
        .collect();
    Ok((doc, violations))
}

fn cache_cmd(action: CacheAction, g: &GlobalOpts) -> Result<Doc, Failure> {
    let dir = cache_dir(g);
    match action {
        CacheAction::List => {
            let infos = cache::list(&dir)?;
            let mut doc = Doc::new(&["system", "records", "height_cutoff", "path"]);
            doc.comment(&format!("cache directory {}", dir.display()));
            let mut entries = Vec::new();
            for i in infos {
                doc.row(vec![
                    i.system.clone(),
                    i.records.to_string(),
                    i.height_cutoff.to_string(),
                    i.path.display().to_string(),
                ]);
                entries.push(json!({
                    "system": i.system,
                    "records": i.records,
                    "height_cutoff": i.height_cutoff,
                    "path": i.path.display().to_string(),
                }));
            }
            doc.json = json!({"schema_version": SCHEMA_VERSION, "dir": dir.display().to_string(), "caches": entries});
            Ok(doc)
        }
        CacheAction::Clear => {
            let n = cache::clear(&dir)?;
            let mut doc = Doc::new(&["removed"]);
            doc.row(vec![n.to_string()]);
            doc.json = json!({"schema_version": SCHEMA_VERSION, "removed": n});
            Ok(doc)
        }
    }
}
