//! Words in edge generators: `g3^-1 g2 g3`, `-3 2 3`, or `-3,2,3`; `e` is empty.

pub fn parse(s: &str) -> Result<Vec<i32>, String> {
    let mut out = Vec::new();
    let mut pos = 0;
    for token in s.split(|c: char| c.is_whitespace() || c == ',') {
        let at = pos;
        pos += token.len() + 1;
        if token.is_empty() || token == "e" {
            continue;
        }
        let bad = || format!("edge word: bad token `{token}` at byte {at}");
        let (body, inverse) = match token.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (token, false),
        };
        let body = body.strip_prefix('g').unwrap_or(body);
        let n: i32 = body.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        out.push(if inverse { -n } else { n });
    }
    Ok(out)
}
