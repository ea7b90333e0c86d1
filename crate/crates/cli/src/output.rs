//! Rendering: human tables on stdout, JSON lines, and CSV files. All output
//! is deterministic for fixed inputs and flags.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde_json::json;

use sgring::error::Result;
use sgring::graded::Resolution;
use sgring::harness::{CheckReport, HypRow, Qu2Row, CSV_HEADER};
use sgring::ideal::MonomialFractionalIdeal as Ideal;
use sgring::semigroup::SemigroupInvariants;

pub fn print_invariants(inv: &SemigroupInvariants, json: bool) {
    if json {
        println!("{}", serde_json::to_string(inv).unwrap());
        return;
    }
    let gens: Vec<String> = inv.generators.iter().map(u64::to_string).collect();
    println!("generators   <{}>", gens.join(","));
    println!("frobenius    {}", inv.frobenius);
    println!("genus        {}", inv.genus);
    println!("multiplicity {}", inv.multiplicity);
    println!("embdim       {}", inv.embdim);
    println!("llmon        {}", inv.llmon);
    println!("symmetric    {}", inv.symmetric);
    let ap: Vec<String> = inv.apery.iter().map(u64::to_string).collect();
    println!("apery        [{}]", ap.join(","));
}

pub fn print_ideal(ideal: &Ideal, with_ord: bool, json: bool) -> Result<()> {
    let ord = if with_ord || json {
        Some(ideal.ord())
    } else {
        None
    };
    if json {
        let exponents = ideal.exponents().map(|e| e.to_vec());
        let ord_json = match ord {
            Some(Ok(o)) => match o.finite() {
                Some(n) => json!(n),
                None => json!("inf"),
            },
            _ => serde_json::Value::Null,
        };
        println!(
            "{}",
            json!({
                "exponents": exponents,
                "zero": ideal.is_zero(),
                "ord": ord_json,
            })
        );
        return Ok(());
    }
    println!("exponents {ideal}");
    if let Some(o) = ord {
        match o {
            Ok(v) => println!("ord {v}"),
            Err(e) => println!("ord unavailable: {e}"),
        }
    }
    Ok(())
}

pub fn resolution_json(res: &Resolution) -> serde_json::Value {
    let steps: Vec<serde_json::Value> = (1..=res.steps())
        .map(|j| {
            let map = res.map(j);
            let mut entries = Vec::new();
            for row in 0..map.target().rank() {
                for col in 0..map.source().rank() {
                    if let Some((deg, coeff)) = map.entry(row, col).single() {
                        entries.push(json!({
                            "row": row,
                            "col": col,
                            "deg": deg,
                            "coeff": coeff.to_string(),
                        }));
                    }
                }
            }
            json!({
                "step": j,
                "source": map.source().twists(),
                "target": map.target().twists(),
                "entries": entries,
            })
        })
        .collect();
    json!({
        "ring": res.ring.to_string(),
        "degree_bound": res.degree_bound,
        "minimal": res.minimal,
        "betti": res.betti(),
        "steps": steps,
    })
}

pub fn betti_csv(res: &Resolution) -> String {
    let mut out = String::from("j,beta_j,max_syzygy_degree\n");
    let f0 = res.map(1).target();
    out.push_str(&format!(
        "0,{},{}\n",
        f0.rank(),
        f0.twists()
            .iter()
            .max()
            .map_or(String::new(), |m| m.to_string())
    ));
    for j in 1..=res.steps() {
        let fj = res.map(j).source();
        out.push_str(&format!(
            "{j},{},{}\n",
            fj.rank(),
            fj.twists()
                .iter()
                .max()
                .map_or(String::new(), |m| m.to_string())
        ));
    }
    out
}

pub fn print_resolution(res: &Resolution, module: &str, json: bool) {
    if json {
        println!("{}", resolution_json(res));
        return;
    }
    println!("resolution of {module} over {}", res.ring);
    println!("degree bound {}", res.degree_bound);
    let betti: Vec<String> = res.betti().iter().map(usize::to_string).collect();
    println!("betti {}", betti.join(","));
    for j in 1..=res.steps() {
        let map = res.map(j);
        let src: Vec<String> = map.source().twists().iter().map(i64::to_string).collect();
        let tgt: Vec<String> = map.target().twists().iter().map(i64::to_string).collect();
        println!("d_{j}: F[{}] -> F[{}]", src.join(","), tgt.join(","));
    }
}

pub fn print_reports(reports: &[CheckReport], json: bool) {
    if json {
        for r in reports {
            println!("{}", serde_json::to_string(r).unwrap());
        }
        return;
    }
    let mut by_statement: BTreeMap<&str, [usize; 4]> = BTreeMap::new();
    for r in reports {
        let slot = match r.verdict {
            sgring::harness::Verdict::Pass => 0,
            sgring::harness::Verdict::Fail => 1,
            sgring::harness::Verdict::HypothesisFailed => 2,
            sgring::harness::Verdict::Skipped => 3,
        };
        by_statement.entry(&r.statement_id).or_default()[slot] += 1;
    }
    println!("statement            pass fail hyp-failed skipped");
    for (id, counts) in &by_statement {
        println!(
            "{id:20} {:>4} {:>4} {:>10} {:>7}",
            counts[0], counts[1], counts[2], counts[3]
        );
    }
    let fails: usize = by_statement.values().map(|c| c[1]).sum();
    println!("total {} reports, {} FAIL", reports.len(), fails);
    for r in reports
        .iter()
        .filter(|r| r.verdict == sgring::harness::Verdict::Fail)
    {
        println!("FAIL {} {}", r.statement_id, r.instance);
    }
}

pub fn write_jsonl(reports: &[CheckReport], path: &Path) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    for r in reports {
        writeln!(f, "{}", serde_json::to_string(r).unwrap())?;
    }
    Ok(())
}

pub fn write_report_csv(reports: &[CheckReport], path: &Path) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    writeln!(f, "{CSV_HEADER}")?;
    for r in reports {
        writeln!(f, "{}", r.csv_row())?;
    }
    Ok(())
}

pub fn print_hyp_table(rows: &[HypRow], json: bool) {
    if json {
        for r in rows {
            println!("{}", serde_json::to_string(r).unwrap());
        }
        return;
    }
    println!("a,b,ord_conductor,e_minus_1,equal");
    for r in rows {
        println!(
            "{},{},{},{},{}",
            r.a, r.b, r.ord_conductor, r.e_minus_1, r.equal
        );
    }
}

pub fn write_hyp_csv(rows: &[HypRow], path: &Path) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    writeln!(f, "a,b,ord_conductor,e_minus_1,equal")?;
    for r in rows {
        writeln!(
            f,
            "{},{},{},{},{}",
            r.a, r.b, r.ord_conductor, r.e_minus_1, r.equal
        )?;
    }
    Ok(())
}

pub fn print_qu2_table(rows: &[Qu2Row], json: bool) {
    if json {
        for r in rows {
            println!("{}", serde_json::to_string(r).unwrap());
        }
        return;
    }
    println!("semigroup,genus,multiplicity,ord_conductor,ord_revalidated,is_two");
    for r in rows {
        println!(
            "{},{},{},{},{},{}",
            r.semigroup, r.genus, r.multiplicity, r.ord_conductor, r.ord_revalidated, r.is_two
        );
    }
}

pub fn write_qu2_csv(rows: &[Qu2Row], path: &Path) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    writeln!(
        f,
        "semigroup,genus,multiplicity,ord_conductor,ord_revalidated,is_two"
    )?;
    for r in rows {
        writeln!(
            f,
            "{},{},{},{},{},{}",
            r.semigroup, r.genus, r.multiplicity, r.ord_conductor, r.ord_revalidated, r.is_two
        )?;
    }
    Ok(())
}
