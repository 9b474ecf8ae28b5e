use permchan_core::encoding::fkm_representatives_bounded;
use serde_json::Value;

use crate::args::{CommonArgs, Format};
use crate::error::CliResult;
use crate::group::Context;
use crate::output;

pub fn run(args: &CommonArgs) -> CliResult<()> {
    let ctx = Context::new(args)?;
    let n = ctx.spec.require_cyclic("representatives")?;
    let reps: Vec<String> = fkm_representatives_bounded(n, ctx.d, ctx.bounds.states)?
        .iter()
        .map(ToString::to_string)
        .collect();
    let text = match args.format {
        Format::Table => reps.iter().map(|r| format!("{r}\n")).collect(),
        Format::Csv => {
            let rows: Vec<Vec<String>> = reps
                .iter()
                .enumerate()
                .map(|(j, r)| vec![j.to_string(), r.clone()])
                .collect();
            output::csv(&["orbit", "representative"], &rows)?
        }
        Format::Json => output::json(&Value::from(reps)),
    };
    output::emit(&text, args.out.as_deref())
}
