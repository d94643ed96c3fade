//! Implementations of the CLI subcommands.

use std::error::Error;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use fano::classify::{assemble_census_report, census_rows, family_polygon, verify_family_coverage, FamilyId};
use fano::cones::{polygon_singularity_content, l_reflexive_index, Cone, ConeClass};
use fano::lattice::{FanoPolygon, LatticeVector};
use fano::modseq::RModularSequence;
use fano::numthy::existence_branch;
use rayon::prelude::*;

use crate::doc::{parse_polygon, parse_sequence, polygon_json};
use crate::{ContentFormat, MachineFormat};

type CmdResult = Result<ExitCode, Box<dyn Error>>;

const VERIFICATION_MISMATCH: u8 = 2;

fn read(path: &Path) -> Result<String, Box<dyn Error>> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()).into())
}

fn pair(v: LatticeVector) -> Vec<i64> {
    vec![v.x, v.y]
}

fn class_label(class: &ConeClass) -> &'static str {
    match class {
        ConeClass::PrimitiveT => "primitive-T",
        ConeClass::T { .. } => "T",
        ConeClass::R { .. } => "R",
        ConeClass::Composite { .. } => "composite",
    }
}

pub fn content(path: &Path, format: ContentFormat) -> CmdResult {
    let doc = parse_polygon(&read(path)?)?;
    let name = doc.name.unwrap_or_else(|| path.display().to_string());
    let polygon = FanoPolygon::new(doc.points)?;
    let cones: Vec<Cone> = polygon
        .edges()
        .map(|(u, v)| Cone::new(u, v).expect("validated polygon edge"))
        .collect();
    let sc = polygon_singularity_content(&polygon);
    let reflexive = l_reflexive_index(&polygon);

    match format {
        ContentFormat::Table => {
            println!("polygon {name} ({} vertices): {polygon}", polygon.vertex_count());
            for (i, cone) in cones.iter().enumerate() {
                let (u, v) = cone.rays();
                let m = cone.metrics();
                let c = cone.singularity_content();
                let residual =
                    c.residual.map_or_else(|| "-".to_string(), |res| res.to_string());
                println!(
                    "cone {:>2}: {:<22}  class {:<11}  length {:>3}  height {:>3}  \
                     T-cones {:>2}  residual {residual}",
                    i + 1,
                    format!("({u}, {v})"),
                    class_label(&cone.classify()),
                    m.length,
                    m.height,
                    c.t_cones,
                );
            }
            match reflexive {
                Some(l) => println!("SC = {sc}; {l}-reflexive"),
                None => println!("SC = {sc}; not l-reflexive"),
            }
        }
        ContentFormat::Json => {
            let cones_json: Vec<serde_json::Value> = cones
                .iter()
                .enumerate()
                .map(|(i, cone)| {
                    let (u, v) = cone.rays();
                    let m = cone.metrics();
                    let c = cone.singularity_content();
                    serde_json::json!({
                        "index": i + 1,
                        "rays": [pair(u), pair(v)],
                        "class": class_label(&cone.classify()),
                        "length": m.length,
                        "height": m.height,
                        "t_cones": c.t_cones,
                        "residual": c.residual.map(|r| vec![r.order(), r.weight()]),
                    })
                })
                .collect();
            let out = serde_json::json!({
                "name": name,
                "vertices": polygon.vertices().iter().map(|&v| pair(v)).collect::<Vec<_>>(),
                "cones": cones_json,
                "singularity_content": {
                    "t_cones": sc.t_cone_count,
                    "basket": sc.basket.iter().map(|b| vec![b.order(), b.weight()]).collect::<Vec<_>>(),
                },
                "l_reflexive_index": reflexive,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        ContentFormat::Csv => {
            println!("cone,class,length,height,t_cones,residual_r,residual_s");
            for (i, cone) in cones.iter().enumerate() {
                let m = cone.metrics();
                let c = cone.singularity_content();
                let (rr, rs) = c
                    .residual
                    .map_or((String::new(), String::new()), |res| {
                        (res.order().to_string(), res.weight().to_string())
                    });
                println!(
                    "{},{},{},{},{},{rr},{rs}",
                    i + 1,
                    class_label(&cone.classify()),
                    m.length,
                    m.height,
                    c.t_cones,
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn winding(path: &Path) -> CmdResult {
    let doc = parse_sequence(&read(path)?)?;
    let name = doc.name.unwrap_or_else(|| path.display().to_string());
    let seq = RModularSequence::new(doc.points)?;
    println!("sequence {name}: r = {}, k = {}", seq.r(), seq.len());
    println!("{:>3}  {:>12}  {:>5}  {:>5}", "i", "v_i", "eps_i", "a_i");
    for i in 0..seq.len() {
        println!(
            "{:>3}  {:>12}  {:>5}  {:>5}",
            i + 1,
            seq.vectors()[i].to_string(),
            seq.eps()[i],
            seq.coeffs()[i]
        );
    }
    let formula = seq.formula_winding()?;
    let geometric = seq.geometric_winding()?;
    println!("B(P)       = {}", seq.boundary_sum());
    println!("B(P_dual)  = {}", seq.dual().boundary_sum());
    println!("winding (formula)   = {formula}");
    println!("winding (crossings) = {geometric}");
    println!("twelve-point residual = {}", seq.twelve_point_residual()?);
    Ok(ExitCode::SUCCESS)
}

pub fn family(id: &str, r: i64, s: i64) -> CmdResult {
    let family: FamilyId = id.parse().map_err(|_| {
        format!(
            "unknown family id {id:?}; valid ids: {}",
            FamilyId::ALL.map(|f| f.to_string()).join(", ")
        )
    })?;
    let polygon = family_polygon(family, r, s)?;
    let doc = polygon_json(&format!("{family}({r},{s})"), polygon.vertices());
    println!("{}", serde_json::to_string(&doc)?);
    Ok(ExitCode::SUCCESS)
}

pub fn predicate(k: usize, r: i64, s: i64) -> CmdResult {
    match existence_branch(k, r, s)? {
        Some(branch) => println!("exists: true; branch: {}", branch.describe(r)),
        None => println!("exists: false"),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn census(r_max: i64, jobs: usize, format: MachineFormat) -> CmdResult {
    if r_max < 3 {
        return Err("census needs --r-max >= 3".into());
    }
    let rows = if jobs <= 1 {
        (3..=r_max).flat_map(census_rows).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        pool.install(|| {
            (3..=r_max)
                .into_par_iter()
                .map(census_rows)
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect()
    };
    let report = assemble_census_report(rows, r_max);
    match format {
        MachineFormat::Json => {
            let rows_json: Vec<serde_json::Value> = report
                .rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "r": row.r,
                        "k": row.k,
                        "s": row.s,
                        "count": row.polygon_count,
                        "models": row
                            .canonical_models
                            .iter()
                            .map(|m| m.iter().map(|&v| pair(v)).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            let out = serde_json::json!({
                "r_max": report.r_max,
                "rows": rows_json,
                "clean": report.is_clean(),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        MachineFormat::Csv => {
            println!("r,k,s,count");
            for row in &report.rows {
                println!("{},{},{},{}", row.r, row.k, row.s, row.polygon_count);
            }
        }
    }
    for m in &report.mismatches {
        eprintln!("census mismatch: {m}");
    }
    for u in &report.uniqueness_violations {
        eprintln!(
            "uniqueness violation at (k={}, r={}, s={}): found {} models, expected {}",
            u.k, u.r, u.s, u.count, u.expected
        );
    }
    Ok(if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERIFICATION_MISMATCH)
    })
}

pub fn verify(r: i64) -> CmdResult {
    if r < 3 {
        return Err("verify needs --r >= 3".into());
    }
    let report = verify_family_coverage(r);
    println!(
        "r = {r}: {} polygons enumerated with all determinant-{r} R-cones",
        report.matches.len() + report.orphans.len()
    );
    for m in &report.matches {
        println!("  {} matches family {} at s = {}", m.polygon, m.family, m.s);
    }
    if report.orphans.is_empty() {
        println!("coverage: every enumerated polygon matches a model family");
        Ok(ExitCode::SUCCESS)
    } else {
        for orphan in &report.orphans {
            eprintln!("orphan polygon (matches no family): {orphan}");
        }
        Ok(ExitCode::from(VERIFICATION_MISMATCH))
    }
}
