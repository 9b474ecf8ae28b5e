use permchan_core::rep_theory::{character_table_bounded, frobenius_schur_indicators};
use serde_json::{json, Value};

use crate::args::{CommonArgs, Format};
use crate::error::CliResult;
use crate::group::Context;
use crate::output;

pub fn run(args: &CommonArgs) -> CliResult<()> {
    let ctx = Context::new(args)?;
    let group = ctx.spec.build(ctx.bounds)?;
    let table = character_table_bounded(&group, ctx.bounds.group_order)?;
    let fs = frobenius_schur_indicators(&group, &table)?;
    let class_names: Vec<String> = (0..table.classes().len())
        .map(|k| format!("C{k}"))
        .collect();

    let text = match args.format {
        Format::Table => {
            let mut text = format!(
                "group: {} (order {}, {} classes)\n\n",
                ctx.spec,
                group.order(),
                table.classes().len()
            );
            let mut rows = vec![vec![
                "class".to_string(),
                "size".into(),
                "cycle type".into(),
                "representative".into(),
            ]];
            for (name, class) in class_names.iter().zip(table.classes()) {
                rows.push(vec![
                    name.clone(),
                    class.size.to_string(),
                    class.partition.to_string(),
                    class.representative.to_string(),
                ]);
            }
            text += &output::table(&rows);
            text.push('\n');
            text += &output::table(&character_rows(&table, &fs.values, &class_names));
            text
        }
        Format::Csv => {
            let rows = character_rows(&table, &fs.values, &class_names);
            let header: Vec<&str> = rows[0].iter().map(String::as_str).collect();
            output::csv(&header, &rows[1..])?
        }
        Format::Json => {
            let classes: Vec<Value> = table
                .classes()
                .iter()
                .map(|c| {
                    json!({
                        "representative": c.representative.to_string(),
                        "size": c.size,
                        "cycle_type": c.partition.to_string(),
                    })
                })
                .collect();
            let irreps: Vec<Value> = table
                .irreps()
                .iter()
                .zip(&fs.values)
                .map(|(irrep, nu)| {
                    let chars: Vec<Value> = irrep
                        .characters
                        .iter()
                        .map(|z| json!({ "re": z.re, "im": z.im }))
                        .collect();
                    json!({
                        "label": irrep.label,
                        "dimension": irrep.dimension,
                        "frobenius_schur": nu,
                        "characters": chars,
                    })
                })
                .collect();
            let mut map = ctx.json_header();
            map.insert("order".into(), group.order().into());
            map.insert("classes".into(), classes.into());
            map.insert("irreps".into(), irreps.into());
            output::json(&Value::Object(map))
        }
    };
    output::emit(&text, args.out.as_deref())
}

fn character_rows(
    table: &permchan_core::rep_theory::CharacterTable,
    fs: &[i32],
    class_names: &[String],
) -> Vec<Vec<String>> {
    let mut header = vec!["irrep".to_string(), "dim".into(), "FS".into()];
    header.extend(class_names.iter().cloned());
    let mut rows = vec![header];
    for (irrep, nu) in table.irreps().iter().zip(fs) {
        let mut row = vec![
            irrep.label.clone(),
            irrep.dimension.to_string(),
            nu.to_string(),
        ];
        row.extend(irrep.characters.iter().map(|&z| output::complex(z)));
        rows.push(row);
    }
    rows
}
