use std::io::Write;

use nlspec_core::census::{
    default_workers, ingest_graph6, render_scan, render_verification, run_census, scan_conjecture,
    verify_characterization, CensusReport, Filter, Source, Verdict,
};
use nlspec_core::families::{
    canonical_partition, closed_form_spectrum, make_family, FamilyId, FamilyParams, FamilySpec,
};
use nlspec_core::graph::{write_graph6, Graph};
use nlspec_core::partitions::{coarsest_equitable_refinement, quotient_matrix, verify_quotient_embedding, Partition};
use nlspec_core::poly::squarefree_part;
use nlspec_core::spectral::{classify, spectral_summary, ClassRecord};
use serde::Serialize;
use serde_json::json;

use crate::args::{CensusArgs, Command, FamilyArgs, Format, GraphArgs, QuotientArgs, RunArgs};
use crate::{CliError, Status};

pub fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    match command {
        Command::Spectrum(a) => spectrum(&a, out, err),
        Command::Classify(a) => classify_cmd(&a, out, err),
        Command::Family(a) => family(&a, out),
        Command::Quotient(a) => quotient(&a, out, err),
        Command::Census(a) => census(&a, out, err),
        Command::VerifyTheorem(a) => verify(&a, out),
        Command::Conjecture(a) => conjecture(&a, out),
    }
}

struct Input {
    graph: Graph,
    spec: Option<FamilySpec>,
}

fn family_spec(
    id: FamilyId,
    a: Option<usize>,
    b: Option<usize>,
    c: Option<usize>,
    n: Option<usize>,
) -> Result<FamilySpec, CliError> {
    FamilySpec::from_params(id, FamilyParams { a, b, c, n }).map_err(|e| CliError::Usage(e.to_string()))
}

/// Resolves the input source. File problems are reported on `err` and
/// flagged through the returned `bool`.
fn read_inputs(args: &GraphArgs, err: &mut dyn Write) -> Result<(Vec<Input>, bool), CliError> {
    let input = &args.input;
    if let Some(g) = &input.graph6 {
        return Ok((vec![Input { graph: g.clone(), spec: None }], false));
    }
    if let Some(id) = input.family {
        let p = &args.params;
        let spec = family_spec(id, p.a, p.b, p.c, p.n)?;
        let graph = make_family(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok((vec![Input { graph, spec: Some(spec) }], false));
    }
    let path = input.file.as_ref().expect("clap enforces one input");
    let ingested = ingest_graph6(path).map_err(|e| CliError::Operational(e.to_string()))?;
    for d in &ingested.diagnostics {
        writeln!(err, "{}: {d}", path.display())?;
    }
    let graphs = ingested.graphs.into_iter().map(|(_, graph)| Input { graph, spec: None }).collect();
    Ok((graphs, !ingested.diagnostics.is_empty()))
}

fn status(partial: bool) -> Status {
    if partial {
        Status::Partial
    } else {
        Status::Ok
    }
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct SpectrumRow {
    graph6: String,
    n: usize,
    charpoly: String,
    factored: String,
}

fn spectrum(args: &GraphArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    let (inputs, mut partial) = read_inputs(args, err)?;
    let mut csv = (args.format == Format::Csv).then(|| csv::Writer::from_writer(Vec::new()));
    for input in &inputs {
        let g6 = write_graph6(&input.graph);
        let s = match spectral_summary(&input.graph) {
            Ok(s) => s,
            Err(e) => {
                writeln!(err, "{g6}: {e}")?;
                partial = true;
                continue;
            }
        };
        let eigenvalues = s.approximate_eigenvalues().map_err(|e| CliError::Operational(e.to_string()))?;
        match args.format {
            Format::Text => {
                writeln!(out, "graph6: {g6}")?;
                writeln!(out, "n: {}", s.n)?;
                writeln!(out, "characteristic polynomial: {}", s.charpoly)?;
                writeln!(out, "factored: {}", s.factored())?;
                for f in &s.decomposition.factors {
                    writeln!(out, "multiplicity {}: {}", f.level, f.component)?;
                }
                let shown: Vec<String> = eigenvalues.iter().map(|x| format!("{x:.12}")).collect();
                writeln!(out, "eigenvalues: {}", shown.join(" "))?;
                writeln!(out, "second smallest is 1: {}", s.rho_second_smallest_is_one())?;
            }
            Format::Json => {
                let levels: Vec<_> = s
                    .decomposition
                    .factors
                    .iter()
                    .map(|f| json!({"level": f.level, "component": f.component.to_string()}))
                    .collect();
                json_line(
                    out,
                    &json!({
                        "graph6": g6,
                        "n": s.n,
                        "charpoly": s.charpoly.to_string(),
                        "factored": s.factored(),
                        "levels": levels,
                        "eigenvalues": eigenvalues,
                        "rho_is_1": s.rho_second_smallest_is_one(),
                    }),
                )?;
            }
            Format::Csv => {
                let row = SpectrumRow { graph6: g6, n: s.n, charpoly: s.charpoly.to_string(), factored: s.factored() };
                csv.as_mut().expect("csv writer").serialize(&row)?;
            }
        }
    }
    if let Some(w) = csv {
        out.write_all(&w.into_inner().map_err(|e| CliError::Operational(e.to_string()))?)?;
    }
    Ok(status(partial))
}

fn write_record_text(out: &mut dyn Write, r: &ClassRecord) -> Result<(), CliError> {
    let theta = r.theta_component.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
    writeln!(out, "graph6: {}", r.graph6)?;
    writeln!(out, "n: {}", r.n)?;
    writeln!(out, "in_Gn3: {}", r.in_gn3)?;
    writeln!(out, "theta_component: {theta}")?;
    writeln!(out, "rho_is_1: {}", r.rho_is_1)?;
    writeln!(out, "nu: {}", r.nu)?;
    writeln!(out, "diam: {}", r.diam)?;
    writeln!(out, "cograph: {}", r.cograph)?;
    writeln!(out, "in_G1: {}", r.in_g1)?;
    Ok(())
}

fn write_records(out: &mut dyn Write, format: Format, records: &[ClassRecord]) -> Result<(), CliError> {
    match format {
        Format::Text => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write_record_text(out, r)?;
            }
        }
        Format::Json => {
            for r in records {
                json_line(out, r)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if records.is_empty() {
                w.write_record(ClassRecord::CSV_COLUMNS)?;
            }
            for r in records {
                w.serialize(r)?;
            }
            out.write_all(&w.into_inner().map_err(|e| CliError::Operational(e.to_string()))?)?;
        }
    }
    Ok(())
}

fn classify_cmd(args: &GraphArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    let (inputs, mut partial) = read_inputs(args, err)?;
    let mut records = Vec::new();
    for input in &inputs {
        match classify(&input.graph) {
            Ok(r) => records.push(r),
            Err(e) => {
                writeln!(err, "{}: {e}", write_graph6(&input.graph))?;
                partial = true;
            }
        }
    }
    write_records(out, args.format, &records)?;
    Ok(status(partial))
}

fn cells_text(p: &Partition) -> String {
    p.cells()
        .iter()
        .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn family(args: &FamilyArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let spec = family_spec(args.family, args.a, args.b, args.c, args.n)?;
    let g = make_family(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let partition = canonical_partition(&spec).ok();
    let closed = closed_form_spectrum(spec.id(), spec.order()).ok();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    match args.format {
        Format::Text => {
            writeln!(out, "family: {spec}")?;
            writeln!(out, "graph6: {}", write_graph6(&g))?;
            writeln!(out, "n: {}", g.order())?;
            let e: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(out, "edges ({}): {}", edges.len(), e.join(" "))?;
            let d: Vec<String> = g.degrees().iter().map(ToString::to_string).collect();
            writeln!(out, "degrees: {}", d.join(" "))?;
            match &partition {
                Some(p) => writeln!(out, "partition: {p}")?,
                None => writeln!(out, "partition: none")?,
            }
            if let Some(c) = &closed {
                writeln!(out, "closed form: {c}")?;
            }
        }
        Format::Json => json_line(
            out,
            &json!({
                "family": spec.to_string(),
                "graph6": write_graph6(&g),
                "n": g.order(),
                "edges": edges,
                "degrees": g.degrees(),
                "partition": partition.as_ref().map(|p| p.cells().to_vec()),
                "closed_form": closed.as_ref().map(ToString::to_string),
            }),
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["family", "graph6", "n", "edges", "partition", "closed_form"])?;
            w.write_record([
                spec.to_string(),
                write_graph6(&g),
                g.order().to_string(),
                edges.len().to_string(),
                partition.as_ref().map(cells_text).unwrap_or_default(),
                closed.as_ref().map(ToString::to_string).unwrap_or_default(),
            ])?;
            out.write_all(&w.into_inner().map_err(|e| CliError::Operational(e.to_string()))?)?;
        }
    }
    Ok(Status::Ok)
}

fn parse_partition(text: &str, order: usize) -> Result<Partition, CliError> {
    let cells = text
        .split(';')
        .map(|cell| {
            cell.split(',')
                .map(|v| {
                    v.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad vertex '{v}' in partition")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(order, cells).map_err(|e| CliError::Usage(e.to_string()))
}

fn quotient(args: &QuotientArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    let (inputs, mut partial) = read_inputs(&args.graph, err)?;
    let mut failed = false;
    let mut rows = Vec::new();
    for input in &inputs {
        let g = &input.graph;
        let g6 = write_graph6(g);
        let p = match (&args.partition, input.spec) {
            (Some(text), _) => parse_partition(text, g.order())?,
            (None, Some(spec)) if !args.refine => match canonical_partition(&spec) {
                Ok(p) => p,
                Err(_) => coarsest_equitable_refinement(g, &Partition::unit(g.order())).expect("orders agree"),
            },
            _ => coarsest_equitable_refinement(g, &Partition::unit(g.order())).expect("orders agree"),
        };
        let (q, embedded) = match quotient_matrix(g, &p).and_then(|q| Ok((verify_quotient_embedding(g, &p)?, q))) {
            Ok((embedded, q)) => (q, embedded),
            Err(e) => {
                writeln!(err, "{g6}: {e}")?;
                partial = true;
                continue;
            }
        };
        failed |= !embedded;
        let qpoly = q.char_poly();
        let roots = squarefree_part(&qpoly).map_err(|e| CliError::Operational(e.to_string()))?;
        match args.graph.format {
            Format::Text => {
                writeln!(out, "graph6: {g6}")?;
                writeln!(out, "partition: {p}")?;
                writeln!(out, "quotient:")?;
                write!(out, "{q}")?;
                writeln!(out, "quotient characteristic polynomial: {qpoly}")?;
                writeln!(
                    out,
                    "quotient polynomial divides the characteristic polynomial: {}",
                    if embedded { "yes" } else { "NO" }
                )?;
            }
            Format::Json => {
                let matrix: Vec<Vec<String>> =
                    (0..q.order()).map(|i| q.row(i).iter().map(ToString::to_string).collect()).collect();
                json_line(
                    out,
                    &json!({
                        "graph6": g6,
                        "partition": p.cells(),
                        "quotient": matrix,
                        "charpoly": qpoly.to_string(),
                        "squarefree": roots.to_string(),
                        "embedded": embedded,
                    }),
                )?;
            }
            Format::Csv => rows.push([g6, cells_text(&p), qpoly.to_string(), embedded.to_string()]),
        }
    }
    if args.graph.format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["graph6", "partition", "charpoly", "embedded"])?;
        for r in rows {
            w.write_record(r)?;
        }
        out.write_all(&w.into_inner().map_err(|e| CliError::Operational(e.to_string()))?)?;
    }
    if failed {
        return Ok(Status::Failed);
    }
    Ok(status(partial))
}

fn source(run: &RunArgs) -> Source {
    match &run.file {
        Some(path) => Source::Graph6File(path.clone()),
        None => Source::Enumerate,
    }
}

fn workers(run: &RunArgs) -> usize {
    run.workers.workers.map_or_else(default_workers, usize::from)
}

fn census_error(e: nlspec_core::CensusError) -> CliError {
    match e {
        nlspec_core::CensusError::EnumerationOrder(_) | nlspec_core::CensusError::OrderTooSmall(_) => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Operational(other.to_string()),
    }
}

fn summary_text(report: &CensusReport) -> String {
    let s = &report.summary;
    let mut text = format!(
        "# n = {}, classified = {}, matched = {}, in_Gn3 = {}, in_G1 = {}\n",
        report.n, s.classified, s.matched, s.in_gn3, s.in_g1
    );
    text.push_str("# count in_Gn3 rho_is_1 nu diam cograph in_G1\n");
    for (c, count) in &s.combos {
        text.push_str(&format!(
            "# {count} {} {} {} {} {} {}\n",
            c.in_gn3, c.rho_is_1, c.nu, c.diam, c.cograph, c.in_g1
        ));
    }
    text
}

fn census(args: &CensusArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    let filter = Filter {
        in_gn3: args.in_gn3,
        rho_is_1: args.rho_is_1,
        nu: args.nu,
        diam: args.diam,
        cograph: args.cograph,
        in_g1: args.in_g1,
    };
    let run = &args.run;
    let report = run_census(&source(run), run.n, &filter, workers(run)).map_err(census_error)?;
    for d in &report.diagnostics {
        writeln!(err, "{d}")?;
    }
    match run.format {
        Format::Text => {
            writeln!(out, "graph6 in_Gn3 theta_component rho_is_1 nu diam cograph in_G1")?;
            for r in &report.records {
                let c = &r.class;
                let theta = c.theta_component.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
                writeln!(
                    out,
                    "{} {} [{theta}] {} {} {} {} {}",
                    c.graph6, c.in_gn3, c.rho_is_1, c.nu, c.diam, c.cograph, c.in_g1
                )?;
            }
            write!(out, "{}", summary_text(&report))?;
        }
        Format::Json => {
            for r in &report.records {
                json_line(out, r)?;
            }
            write!(err, "{}", summary_text(&report))?;
        }
        Format::Csv => {
            let records: Vec<ClassRecord> = report.records.iter().map(|r| r.class.clone()).collect();
            write_records(out, Format::Csv, &records)?;
            write!(err, "{}", summary_text(&report))?;
        }
    }
    Ok(Status::Ok)
}

fn verify(run: &RunArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let reports = verify_characterization(run.n, &source(run), workers(run)).map_err(census_error)?;
    match run.format {
        Format::Text => {
            write!(out, "{}", render_verification(&reports))?;
            writeln!(out, "{} {}", reports.0.verdict, reports.1.verdict)?;
        }
        Format::Json => json_line(out, &json!({"n": run.n, "reports": [&reports.0, &reports.1]}))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["part", "n", "verdict", "expected", "found"])?;
            for r in [&reports.0, &reports.1] {
                w.write_record([
                    r.part.label().to_string(),
                    r.n.to_string(),
                    r.verdict.to_string(),
                    r.expected.join(" "),
                    r.found.join(" "),
                ])?;
            }
            out.write_all(&w.into_inner().map_err(|e| CliError::Operational(e.to_string()))?)?;
        }
    }
    let pass = reports.0.verdict == Verdict::Pass && reports.1.verdict == Verdict::Pass;
    Ok(if pass { Status::Ok } else { Status::Failed })
}

fn conjecture(run: &RunArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let scan = scan_conjecture(run.n, &source(run), workers(run)).map_err(census_error)?;
    match run.format {
        Format::Text => write!(out, "{}", render_scan(&scan))?,
        Format::Json => json_line(out, &scan)?,
        Format::Csv => {
            let records: Vec<ClassRecord> = scan.records.iter().map(|r| r.class.clone()).collect();
            write_records(out, Format::Csv, &records)?;
        }
    }
    Ok(if scan.all_reverified() { Status::Ok } else { Status::Failed })
}
