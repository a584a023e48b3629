//! The `code-info` subcommand: one code, its bounds, and its relatives.

use anyhow::Result;
use clap::Args;
use serde_json::json;

use duadic::bounds::{
    amplified_bch_bound, bch_bound, square_root_bound, theorem_bound, theorem_dual_bound,
};
use duadic::cosets::{complement_classes, is_splitting, weight_defining_set};
use duadic::cyclic::CyclicCode;

use crate::output::{classes_string, emit};
use crate::{CommonOpts, EXIT_OK};

#[derive(Args)]
pub struct CodeInfoArgs {
    /// Extension degree; the code length is 2^m - 1.
    #[arg(long, default_value_t = 7, env = "DUADIC_M")]
    pub m: u32,

    /// Weight-class modulus.
    #[arg(long, default_value_t = 6, env = "DUADIC_R")]
    pub r: u32,

    /// Weight classes, e.g. --S 0,4,5.
    #[arg(long = "S", value_delimiter = ',', required = true, env = "DUADIC_S")]
    pub s: Vec<u32>,

    #[command(flatten)]
    pub common: CommonOpts,
}

pub fn run(args: CodeInfoArgs) -> Result<u8> {
    let ctx = args.common.field(args.m)?;
    let n = ctx.n();
    let t = weight_defining_set(args.r, args.m, &args.s)?;
    let code = CyclicCode::from_defining_set(ctx.clone(), t.clone())?;

    let s_bar = complement_classes(args.r, &args.s);
    let t_bar = weight_defining_set(args.r, args.m, &s_bar)?;
    let duadic = is_splitting(&t, &t_bar, n - 1);

    let bch = bch_bound(&t)?;
    let amplified = amplified_bch_bound(&t)?;
    let table = theorem_bound(args.m, &args.s).ok().filter(|_| args.r == 6);
    let table_dual = theorem_dual_bound(args.m, &args.s).ok().filter(|_| args.r == 6);
    let sqrt_plain = square_root_bound(n, false);
    let sqrt_mu = square_root_bound(n, true);

    let record = code.record();
    let dual = code.dual();
    let dual_record = dual.record();

    let json = json!({
        "r": args.r,
        "m": args.m,
        "s": args.s,
        "s_bar": s_bar,
        "n": record.n,
        "k": record.k,
        "defining_set_size": record.defining_set_size,
        "generator_hex": record.generator_hex,
        "duadic": duadic,
        "bounds": {
            "bch": bch,
            "amplified": amplified,
            "table": table,
            "table_dual": table_dual,
            "square_root": sqrt_plain,
            "square_root_mu_minus_one": sqrt_mu,
        },
        "properties": record.properties,
        "dual": {
            "n": dual_record.n,
            "k": dual_record.k,
            "defining_set_size": dual_record.defining_set_size,
            "generator_hex": dual_record.generator_hex,
        },
    });

    let mut text = String::new();
    text += &format!(
        "C[{},{},{}]: [{}, {}] cyclic code, |T| = {}\n",
        args.r,
        args.m,
        classes_string(&args.s),
        record.n,
        record.k,
        record.defining_set_size
    );
    text += &format!("  generator        = {}\n", code.generator());
    text += &format!("  generator (hex)  = {}\n", record.generator_hex);
    text += &format!("  duadic pair      = {duadic} (complement {})\n", classes_string(&s_bar));
    text += &format!("  bch bound        = {} (run start {}, length {})\n", bch.bound, bch.run_start, bch.run_length);
    text += &format!(
        "  amplified bound  = {} (unit {}, run start {}, length {})\n",
        amplified.bound,
        amplified.witness_unit.unwrap_or(1),
        amplified.run_start,
        amplified.run_length
    );
    match table {
        Some(b) => text += &format!("  table bound      = {b} (dual {})\n", table_dual.unwrap_or(b + 1)),
        None => text += "  table bound      = not covered\n",
    }
    text += &format!("  square-root      = {sqrt_plain} (mu = -1 form: {sqrt_mu})\n");
    text += &format!(
        "  dual             = [{}, {}], |T| = {}\n",
        dual_record.n, dual_record.k, dual_record.defining_set_size
    );
    text += &format!(
        "  extended         = self-dual: {}, doubly-even: {}",
        record.properties.self_dual_extended, record.properties.doubly_even_extended
    );

    let csv = vec![
        vec![
            "r".into(), "m".into(), "s".into(), "n".into(), "k".into(),
            "defining_set_size".into(), "duadic".into(), "bch".into(), "amplified".into(),
            "amplified_unit".into(), "table".into(), "square_root_mu_minus_one".into(),
            "self_dual_extended".into(), "doubly_even_extended".into(),
        ],
        vec![
            args.r.to_string(),
            args.m.to_string(),
            classes_string(&args.s),
            record.n.to_string(),
            record.k.to_string(),
            record.defining_set_size.to_string(),
            duadic.to_string(),
            bch.bound.to_string(),
            amplified.bound.to_string(),
            amplified.witness_unit.unwrap_or(1).to_string(),
            table.map_or_else(|| "-".into(), |b| b.to_string()),
            sqrt_mu.to_string(),
            record.properties.self_dual_extended.to_string(),
            record.properties.doubly_even_extended.to_string(),
        ],
    ];

    emit(&args.common, text, json, csv)?;
    Ok(EXIT_OK)
}
