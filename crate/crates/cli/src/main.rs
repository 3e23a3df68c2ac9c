//! Command-line front end: analyze a finite permutation group at a prime,
//! reproduce the reference tables, or run the kernel-membership tests.

use plocal::borel_smith::{borel_smith_basis, build_constraints};
use plocal::classes::{p_subgroup_classes_bounded, Scope};
use plocal::error::Error;
use plocal::families::{named_group_bounded, Family};
use plocal::group::{FiniteGroup, DEFAULT_ELEMENT_BOUND};
use plocal::groupfile::parse_group_file;
use plocal::report::{self, dihedral_class_labels, labeled_class};
use plocal::signspace::unit_space_of_sylow;
use plocal::superclass::SuperclassFunction;
use plocal::verdict::{kernel_membership_cyclic, kernel_necessary, HMarkCandidate};

const USAGE: &str = "\
usage: plocal <command> [options]

commands:
  analyze   full report: classes, lattice, unit spaces or tuple group, verdict
  verdict   the verdict section of analyze
  tables    reference tables: cfb-d8 | units-d8 | cfb-d2n:N | units-d2n:N
  kernel    kernel-membership tests for an h-value vector

group source (analyze, verdict, kernel):
  --group FILE          group definition file (degree/gen lines)
  --family NAME:PARAMS  e.g. dihedral:8, symmetric:5, s2p_normalizer:3,
                        wreath_family:3,2, elementary_abelian:2,2, cyclic:9,
                        alternating:6

options:
  --prime P        the prime p (required for analyze/verdict/kernel)
  --unit-order M   order of the unit group of the coefficient field
                   (default: 1 for p = 2, p-1 for odd p)
  --h V1,V2,...    kernel: candidate values, one per class in table order
  --format FMT     text (default) or json
  --bound N        element-count guard (default 100000)

exit codes: 0 ok, 2 input error, 3 resource bound exceeded";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&args));
}

fn run(args: &[String]) -> i32 {
    if args.is_empty() || args[0] == "--help" || args[0] == "-h" {
        println!("{USAGE}");
        return if args.is_empty() { 2 } else { 0 };
    }
    let command = args[0].as_str();
    let opts = match Options::parse(&args[1..]) {
        Ok(o) => o,
        Err(msg) => return input_error(&msg),
    };
    let result = match command {
        "analyze" => cmd_analyze(&opts, false),
        "verdict" => cmd_analyze(&opts, true),
        "tables" => cmd_tables(&opts),
        "kernel" => cmd_kernel(&opts),
        other => return input_error(&format!("unknown command '{other}'")),
    };
    match result {
        Ok(()) => 0,
        Err(e) => exit_code_for(&e),
    }
}

fn input_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprintln!("run 'plocal --help' for usage");
    2
}

fn exit_code_for(e: &Error) -> i32 {
    let code = match e {
        Error::GroupTooLarge { .. } | Error::LatticeTooLarge { .. } => 3,
        Error::Internal(_) => 1,
        _ => 2,
    };
    eprintln!("error: {e}");
    code
}

struct Options {
    group_file: Option<String>,
    family: Option<String>,
    prime: Option<u64>,
    unit_order: Option<u64>,
    h_values: Option<Vec<i64>>,
    format: OutputFormat,
    bound: usize,
    table_name: Option<String>,
}

#[derive(PartialEq, Clone, Copy)]
enum OutputFormat {
    Text,
    Json,
}

impl Options {
    fn parse(args: &[String]) -> Result<Options, String> {
        let mut o = Options {
            group_file: None,
            family: None,
            prime: None,
            unit_order: None,
            h_values: None,
            format: OutputFormat::Text,
            bound: DEFAULT_ELEMENT_BOUND,
            table_name: None,
        };
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            let mut value = |name: &str| {
                it.next()
                    .cloned()
                    .ok_or_else(|| format!("{name} expects a value"))
            };
            match arg.as_str() {
                "--group" => o.group_file = Some(value("--group")?),
                "--family" => o.family = Some(value("--family")?),
                "--prime" => {
                    o.prime = Some(
                        value("--prime")?
                            .parse()
                            .map_err(|_| "--prime expects an integer".to_string())?,
                    )
                }
                "--unit-order" => {
                    o.unit_order = Some(
                        value("--unit-order")?
                            .parse()
                            .map_err(|_| "--unit-order expects an integer".to_string())?,
                    )
                }
                "--h" => {
                    let raw = value("--h")?;
                    let vals = raw
                        .split(',')
                        .map(|t| t.trim().parse::<i64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| "--h expects comma-separated integers".to_string())?;
                    o.h_values = Some(vals);
                }
                "--format" => {
                    o.format = match value("--format")?.as_str() {
                        "text" => OutputFormat::Text,
                        "json" => OutputFormat::Json,
                        other => return Err(format!("unknown format '{other}'")),
                    }
                }
                "--bound" => {
                    o.bound = value("--bound")?
                        .parse()
                        .map_err(|_| "--bound expects an integer".to_string())?
                }
                other if !other.starts_with('-') && o.table_name.is_none() => {
                    o.table_name = Some(other.to_string());
                }
                other => return Err(format!("unknown option '{other}'")),
            }
        }
        Ok(o)
    }

    fn load_group(&self) -> Result<(FiniteGroup, String), Error> {
        match (&self.group_file, &self.family) {
            (Some(path), None) => {
                let g = parse_group_file(std::path::Path::new(path), self.bound)?;
                Ok((g, path.clone()))
            }
            (None, Some(desc)) => {
                let fam = Family::parse(desc)?;
                let g = named_group_bounded(fam, self.bound)?;
                Ok((g, fam.describe()))
            }
            _ => Err(Error::Precondition(
                "exactly one of --group or --family is required".into(),
            )),
        }
    }

    fn prime(&self) -> Result<u64, Error> {
        let p = self
            .prime
            .ok_or_else(|| Error::Precondition("--prime is required".into()))?;
        if !plocal::families::is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        Ok(p)
    }

    fn unit_order_for(&self, p: u64) -> u64 {
        self.unit_order.unwrap_or(if p == 2 { 1 } else { p - 1 })
    }
}

fn cmd_analyze(opts: &Options, verdict_only: bool) -> Result<(), Error> {
    let (group, descriptor) = opts.load_group()?;
    let p = opts.prime()?;
    let m = opts.unit_order_for(p);
    let table = p_subgroup_classes_bounded(&group, p, opts.bound)?;
    let report = report::analyze(&group, &table, &descriptor, m)?;
    match (opts.format, verdict_only) {
        (OutputFormat::Json, false) => println!("{}", report::to_json(&report)),
        (OutputFormat::Json, true) => println!(
            "{}",
            serde_json::to_string_pretty(&report.verdict).expect("verdict serializes")
        ),
        (OutputFormat::Text, false) => print!("{}", report::to_text(&report)),
        (OutputFormat::Text, true) => {
            let text = report::to_text(&report);
            let start = text.find("verdict:").unwrap_or(0);
            print!("{}", &text[start..]);
        }
    }
    Ok(())
}

fn cmd_kernel(opts: &Options) -> Result<(), Error> {
    let (group, descriptor) = opts.load_group()?;
    let p = opts.prime()?;
    let table = p_subgroup_classes_bounded(&group, p, opts.bound)?;
    let values = opts
        .h_values
        .clone()
        .ok_or_else(|| Error::Precondition("--h is required for the kernel command".into()))?;
    let n = table.class_count(Scope::Group);
    if values.len() != n {
        return Err(Error::Precondition(format!(
            "--h expects {n} values (one per class), got {}",
            values.len()
        )));
    }
    let system = build_constraints(&group, &table, Scope::Group);
    let cand = HMarkCandidate::new(SuperclassFunction::new(values.clone()), &system, true)?;

    let sylow_cyclic = table.sylow.is_cyclic(&group) && !table.sylow.is_trivial();
    let (mode, in_kernel, check) = if p != 2 && sylow_cyclic {
        let exact = kernel_membership_cyclic(&group, &table, &cand)?;
        let general = kernel_necessary(&group, &table, &cand)?;
        ("cyclic-exact", exact, general)
    } else {
        let general = kernel_necessary(&group, &table, &cand)?;
        let mode = if p == 2 {
            "even-values-exact"
        } else {
            "necessary-only"
        };
        (mode, general.holds, general)
    };
    let exact = check.exact || mode == "cyclic-exact";

    if opts.format == OutputFormat::Json {
        let doc = serde_json::json!({
            "schema": "plocal/kernel/v1",
            "group": descriptor,
            "prime": p,
            "h": values,
            "mode": mode,
            "in_kernel": in_kernel,
            "exact": exact,
            "congruences": check.checked,
            "violation": check.violation,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializes")
        );
    } else {
        println!("group {descriptor} | prime {p} | h = {values:?}");
        println!("mode: {mode}");
        for c in &check.checked {
            println!(
                "  classes ({}, {}) mod {}: {}",
                c.lower_class,
                c.upper_class,
                c.modulus,
                if c.holds { "ok" } else { "violated" }
            );
        }
        if let Some(v) = &check.violation {
            println!("  violation: {v}");
        }
        let line = match (in_kernel, exact) {
            (true, true) => "in kernel",
            (true, false) => "necessary conditions hold",
            (false, _) => "not in kernel",
        };
        println!("{line}");
    }
    Ok(())
}

fn cmd_tables(opts: &Options) -> Result<(), Error> {
    let name = opts
        .table_name
        .clone()
        .ok_or_else(|| Error::Precondition("tables expects a table name".into()))?;
    let (kind, param) = match name.split_once(':') {
        Some((k, v)) => (
            k.to_string(),
            Some(
                v.parse::<u32>()
                    .map_err(|_| Error::Precondition(format!("bad table parameter '{v}'")))?,
            ),
        ),
        None => (name.clone(), None),
    };
    let (order, signs, restrict) = match (kind.as_str(), param) {
        ("cfb-d8", None) => (8usize, false, false),
        ("units-d8", None) => (8, true, false),
        ("cfb-d2n", Some(n)) if (4..16).contains(&n) => (1usize << n, false, true),
        ("units-d2n", Some(n)) if (4..16).contains(&n) => (1usize << n, true, true),
        _ => {
            return Err(Error::Precondition(format!(
                "unknown table '{name}' (expected cfb-d8, units-d8, cfb-d2n:N or units-d2n:N with N >= 4)"
            )))
        }
    };
    let group = named_group_bounded(Family::Dihedral(order), opts.bound)?;
    let table = p_subgroup_classes_bounded(&group, 2, opts.bound)?;
    let labels = dihedral_class_labels(&group, &table)
        .ok_or_else(|| Error::Internal("dihedral labeling failed".into()))?;
    // reference column order; for the bigger dihedral tables only the
    // order-at-most-2 columns are displayed
    let full_label = format!("D{order}");
    let wanted: Vec<&str> = if restrict {
        vec!["1", "K1", "K2", "C2"]
    } else {
        vec!["1", "K1", "K2", "C2", "H1", "H2", "C4", &full_label]
    };
    let cols: Vec<usize> = wanted
        .iter()
        .map(|w| labeled_class(&labels, w).ok_or_else(|| Error::Internal("label missing".into())))
        .collect::<Result<_, _>>()?;
    let basis = borel_smith_basis(&group, &table, Scope::Sylow)?;
    let rows: Vec<Vec<i64>> = if signs {
        let space = unit_space_of_sylow(&group, &table)?;
        space
            .basis
            .iter()
            .map(|b| cols.iter().map(|&c| if b[c] { -1 } else { 1 }).collect())
            .collect()
    } else {
        basis
            .rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect()
    };
    if opts.format == OutputFormat::Json {
        let doc = serde_json::json!({
            "schema": "plocal/table/v1",
            "name": name,
            "columns": wanted,
            "rank": basis.rank(),
            "rows": rows,
            "signs": signs,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializes")
        );
    } else {
        println!("table {name} (rank {})", basis.rank());
        println!("  {}", wanted.join(" "));
        for row in &rows {
            let cells: Vec<String> = row
                .iter()
                .map(|v| {
                    if signs {
                        format!("{v:+}")
                    } else {
                        v.to_string()
                    }
                })
                .collect();
            println!("  {}", cells.join(" "));
        }
    }
    Ok(())
}
