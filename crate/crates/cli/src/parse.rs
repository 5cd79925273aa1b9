//! Weight arguments: comma-separated integers with `a^m` meaning `m` copies of `a`.

use bbw_ulrich::GlWeight;

pub fn expand(arg: &str, raw: &str) -> Result<Vec<i64>, String> {
    let mut out = Vec::new();
    for item in raw.split(',').map(str::trim) {
        if item.is_empty() {
            return Err(format!("--{arg}: empty entry in '{raw}'"));
        }
        let (value, count) = match item.split_once('^') {
            Some((v, c)) => {
                let c: usize = c
                    .parse()
                    .map_err(|_| format!("--{arg}: bad repetition count in '{item}'"))?;
                (v, c)
            }
            None => (item, 1),
        };
        let value: i64 = value
            .parse()
            .map_err(|_| format!("--{arg}: '{value}' is not an integer"))?;
        out.extend(std::iter::repeat_n(value, count));
    }
    Ok(out)
}

/// Parses a weight and pads it with zeros to `len` entries.
pub fn weight(arg: &str, raw: &str, len: usize) -> Result<GlWeight, String> {
    let entries = expand(arg, raw)?;
    let w = GlWeight::new(entries).map_err(|e| format!("--{arg}: {e}"))?;
    w.pad(len).map_err(|e| format!("--{arg}: {e}"))
}

pub fn sizes(arg: &str, raw: &str) -> Result<Vec<usize>, String> {
    expand(arg, raw)?
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| format!("--{arg}: entries must be positive")))
        .collect()
}
