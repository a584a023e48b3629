//! The `verify` subcommand: containment lemmas, the splitting scan
//! against the reference class lists, and the dual/extended property
//! checks, with a nonzero exit on any failing clause.

use anyhow::Result;
use clap::Args;
use serde::Serialize;
use serde_json::json;

use duadic::bounds::{
    amplified_bch_bound, gcd_power_identity_holds, lemma_suite, theorem_bound, theorem_dual_bound,
};
use duadic::cosets::{
    duadic_scan_with, reference_splitting_classes, weight_defining_set, ScanOptions,
};
use duadic::cyclic::CyclicCode;

use crate::output::{classes_string, emit};
use crate::{CommonOpts, EXIT_MISMATCH, EXIT_OK};

#[derive(Args)]
pub struct VerifyArgs {
    /// Extension degree to verify (odd).
    #[arg(long, env = "DUADIC_M")]
    pub m: Option<u32>,

    /// Verify every m in {5, 7, 9, 11, 13, 15}.
    #[arg(long)]
    pub all_small: bool,

    /// Only run the splitting scan.
    #[arg(long)]
    pub scan: bool,

    /// Only run the containment-lemma suite.
    #[arg(long)]
    pub lemmas: bool,

    /// Let the scan search all swap units instead of only -1.
    #[arg(long)]
    pub mu_any: bool,

    #[command(flatten)]
    pub common: CommonOpts,
}

#[derive(Serialize)]
struct Check {
    section: &'static str,
    name: String,
    m: u32,
    pass: bool,
    detail: String,
}

pub fn run(args: VerifyArgs) -> Result<u8> {
    let ms: Vec<u32> = if args.all_small {
        vec![5, 7, 9, 11, 13, 15]
    } else {
        vec![args.m.unwrap_or(7)]
    };
    let run_all = !args.scan && !args.lemmas;
    let mut checks: Vec<Check> = Vec::new();

    if run_all || args.lemmas {
        // The gcd identity underlying every unit argument.
        let gcd_ok = (1..=20u32)
            .all(|m| (1..=20u32).all(|l| [2u64, 3].iter().all(|&a| gcd_power_identity_holds(a, m, l))));
        checks.push(Check {
            section: "lemmas",
            name: "gcd(a^m-1, a^l-1) = a^gcd(m,l)-1 for a in {2,3}, l,m <= 20".into(),
            m: 0,
            pass: gcd_ok,
            detail: String::new(),
        });
    }

    for &m in &ms {
        if run_all || args.lemmas {
            for clause in lemma_suite(m)? {
                checks.push(Check {
                    section: "lemmas",
                    name: format!(
                        "{} {}: {{av: 1 <= a <= {}}} in T[6,{},{}] with v = {}{}",
                        clause.lemma,
                        classes_string(&clause.s),
                        clause.reach,
                        m,
                        classes_string(&clause.s),
                        clause.v,
                        if clause.degenerate { " (degenerate)" } else { "" }
                    ),
                    m,
                    pass: clause.holds,
                    detail: format!("gcd(v,n)=1: {}", clause.gcd_is_one),
                });
            }
        }

        if run_all || args.scan {
            let opts = ScanOptions {
                mu_any: args.mu_any,
                ..Default::default()
            };
            let records = duadic_scan_with(6, m, &opts)?;
            let got: Vec<Vec<u32>> = records.iter().map(|r| r.s.clone()).collect();
            let expected: Vec<Vec<u32>> = reference_splitting_classes(m)
                .map(|cs| cs.iter().map(|c| c.to_vec()).collect())
                .unwrap_or_default();
            let pass = got == expected;
            checks.push(Check {
                section: "scan",
                name: format!("duadic splitting scan, r = 6, m = {m}"),
                m,
                pass,
                detail: format!(
                    "found {:?}, reference {:?}",
                    got.iter().map(|s| classes_string(s)).collect::<Vec<_>>(),
                    expected.iter().map(|s| classes_string(s)).collect::<Vec<_>>()
                ),
            });
        }

        if run_all {
            let ctx = args.common.field(m)?;
            for s in reference_splitting_classes(m).into_iter().flatten() {
                let t = weight_defining_set(6, m, &s)?;
                let code = CyclicCode::from_defining_set(ctx.clone(), t.clone())?;
                let dual = code.dual();
                let label = classes_string(&s);

                let dual_set_ok = dual.defining_set() == &t.with(0);
                checks.push(Check {
                    section: "properties",
                    name: format!("dual defining set of C[6,{m},{label}] is T with 0 adjoined"),
                    m,
                    pass: dual_set_ok,
                    detail: String::new(),
                });

                let even = code.even_weight_subcode()?;
                checks.push(Check {
                    section: "properties",
                    name: format!("dual of C[6,{m},{label}] is its even-weight subcode"),
                    m,
                    pass: even.generator() == dual.generator(),
                    detail: String::new(),
                });

                let dims_ok = code.dimension() == code.n().div_ceil(2)
                    && dual.dimension() == (code.n() - 1) / 2;
                checks.push(Check {
                    section: "properties",
                    name: format!("dimensions of C[6,{m},{label}] and dual are (n+1)/2 and (n-1)/2"),
                    m,
                    pass: dims_ok,
                    detail: format!("k = {}, dual k = {}", code.dimension(), dual.dimension()),
                });

                let ext = code.extend();
                let sd = ext.is_self_dual();
                let de = ext.is_doubly_even();
                checks.push(Check {
                    section: "properties",
                    name: format!("extended C[6,{m},{label}] is self-dual and doubly-even"),
                    m,
                    pass: sd && de,
                    detail: format!("self-dual: {sd}, doubly-even: {de}"),
                });

                if let Ok(table) = theorem_bound(m, &s) {
                    let amp = amplified_bch_bound(&t)?;
                    checks.push(Check {
                        section: "properties",
                        name: format!("amplified BCH bound of C[6,{m},{label}] reaches the table bound"),
                        m,
                        pass: amp.bound >= table,
                        detail: format!("amplified {} >= table {}", amp.bound, table),
                    });
                    let amp_dual = amplified_bch_bound(dual.defining_set())?;
                    let table_dual = theorem_dual_bound(m, &s)?;
                    checks.push(Check {
                        section: "properties",
                        name: format!("amplified BCH bound of dual C[6,{m},{label}] reaches the dual table bound"),
                        m,
                        pass: amp_dual.bound >= table_dual,
                        detail: format!("amplified {} >= table {}", amp_dual.bound, table_dual),
                    });
                }
            }
        }
    }

    let failures: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
    let mut text = String::new();
    for c in &checks {
        text += &format!(
            "[{}] {:<4} {}{}\n",
            if c.pass { "pass" } else { "FAIL" },
            c.section,
            c.name,
            if c.detail.is_empty() {
                String::new()
            } else {
                format!(" ({})", c.detail)
            }
        );
    }
    text += &format!("{} checks, {} failures", checks.len(), failures.len());
    if let Some(first) = failures.first() {
        text += &format!("\nfirst failing clause: {}", first.name);
    }

    let json = json!({
        "checks": checks,
        "failures": failures.len(),
    });

    let mut csv = vec![vec!["section".into(), "m".into(), "name".into(), "pass".into(), "detail".into()]];
    for c in &checks {
        csv.push(vec![
            c.section.into(),
            c.m.to_string(),
            c.name.clone(),
            c.pass.to_string(),
            c.detail.clone(),
        ]);
    }

    emit(&args.common, text, json, csv)?;
    Ok(if failures.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}
