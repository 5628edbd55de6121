//! Readers and writers for the three legacy branching-data text formats.
//!
//! * Group-signature lines: `[*7, 504, [0,2,3,7], ( 504,156 ) *]`.
//! * Star-separated vector blocks: a group-id line, a flat signature line, a
//!   class line, then one space-separated image row per vector entry, with a
//!   lone `*` line closing each block.
//! * Bracket rows: `[ 504, 156 ][ 0, 2, 3, 7 ][ 5, 6, 2 ][ (2,3)(4,6), ... ]`
//!   with permutations in cycle notation, one entry per line.
//!
//! Neither format declares the permutation degree; it is inferred as the
//! maximum point appearing across an entry's rows or cycles.  Class indices
//! read from files are kept verbatim and flagged as legacy-indexed, because
//! the numbering of conjugacy classes depends on how the producing system
//! ordered them; they are never remapped.

use crate::catalog::GroupLabel;
use crate::error::{Error, Result};
use crate::genvec::EpimorphismRecord;
use crate::perm::Permutation;
use crate::signature::Signature;

/// One `[*genus, order, signature, group id *]` line.
///
/// `raw` preserves the original text so that rewriting a parsed line is
/// byte-exact regardless of the spacing the producer used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSignatureLine {
    pub genus: u32,
    pub order: u128,
    pub signature: Signature,
    pub group_id: GroupLabel,
    pub raw: String,
}

impl GroupSignatureLine {
    /// Builds a fresh line with canonical spacing.
    pub fn new(genus: u32, order: u128, signature: Signature, group_id: GroupLabel) -> Self {
        let raw = format!(
            "[*{}, {}, {}, {} *]",
            genus,
            order,
            signature.flat_text(),
            group_id_field(&group_id)
        );
        GroupSignatureLine {
            genus,
            order,
            signature,
            group_id,
            raw,
        }
    }
}

fn group_id_field(label: &GroupLabel) -> String {
    match label.legacy_id {
        Some((order, id)) => format!("( {},{} )", order, id),
        None => label.text.clone(),
    }
}

/// One star-separated block: a generating vector with its header data.
///
/// `rows` lists all vector entries, hyperbolic pairs first and branch entries
/// last, every row at the block's inferred degree.  `legacy_indexed` is set
/// when the class tuple came from a file and therefore follows the producing
/// system's class numbering rather than this crate's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorBlock {
    pub group_id: GroupLabel,
    pub signature: Signature,
    pub class_tuple: Vec<usize>,
    pub legacy_indexed: bool,
    pub rows: Vec<Permutation>,
}

/// Parses a single group-signature line.
pub fn parse_group_signature_line(text: &str) -> Result<GroupSignatureLine> {
    let trimmed = text.trim();
    let Some(inner) = trimmed.strip_prefix("[*") else {
        return Err(Error::Format(format!(
            "group-signature line must start with \"[*\" (column 1): {trimmed:?}"
        )));
    };
    let Some(inner) = inner.strip_suffix("*]") else {
        return Err(Error::Format(format!(
            "group-signature line is unterminated, expected \"*]\" at column {}",
            trimmed.len() + 1
        )));
    };

    let (genus_text, rest) = split_field(inner)?;
    let genus: u32 = parse_int(genus_text, "genus")?;
    if genus < 2 {
        return Err(Error::Format(format!("genus {} is below 2", genus)));
    }
    let (order_text, rest) = split_field(rest)?;
    let order: u128 = parse_int(order_text, "group order")?;

    let rest = rest.trim_start();
    if !rest.starts_with('[') {
        return Err(Error::Format(format!(
            "expected \"[\" opening the signature, found {rest:?}"
        )));
    }
    let close = rest.find(']').ok_or_else(|| {
        Error::Format("signature bracket is never closed".to_string())
    })?;
    let signature = Signature::parse(&rest[..=close])?;
    let rest = rest[close + 1..].trim_start();
    let rest = rest.strip_prefix(',').unwrap_or(rest).trim();
    if rest.is_empty() {
        return Err(Error::Format("missing group id field".to_string()));
    }
    let group_id = parse_group_id(rest);

    Ok(GroupSignatureLine {
        genus,
        order,
        signature,
        group_id,
        raw: text.to_string(),
    })
}

/// Serializes a line, reproducing parsed input byte-exactly via `raw`.
pub fn write_group_signature_line(line: &GroupSignatureLine) -> String {
    line.raw.clone()
}

fn split_field(text: &str) -> Result<(&str, &str)> {
    match text.find(',') {
        Some(pos) => Ok((text[..pos].trim(), &text[pos + 1..])),
        None => Err(Error::Format(format!(
            "expected a comma after field {:?}",
            text.trim()
        ))),
    }
}

fn parse_int<T: std::str::FromStr>(text: &str, what: &str) -> Result<T> {
    text.trim()
        .parse()
        .map_err(|_| Error::Format(format!("bad {what}: {:?}", text.trim())))
}

/// Reads a group identifier: a legacy `(order,id)` pair when the text has
/// exactly that shape, otherwise a plain label.
fn parse_group_id(text: &str) -> GroupLabel {
    let trimmed = text.trim();
    if let Some(inner) = trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() == 2 {
            if let (Ok(order), Ok(id)) = (
                parts[0].trim().parse::<u128>(),
                parts[1].trim().parse::<u64>(),
            ) {
                return GroupLabel::legacy(order, id);
            }
        }
    }
    GroupLabel::text_only(trimmed)
}

/// Parses a whole file of star-separated vector blocks.
///
/// Blank lines are ignored, blocks end at a lone `*` line, and a missing
/// final `*` is tolerated.  For a signature without branch points the class
/// line is absent and a `[ ]` marker line follows the hyperbolic rows.
pub fn parse_vector_blocks(text: &str) -> Result<Vec<VectorBlock>> {
    let mut blocks = Vec::new();
    let mut segment: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "*" {
            if !segment.is_empty() {
                blocks.push(parse_block(&segment)?);
                segment.clear();
            }
            continue;
        }
        segment.push((i + 1, trimmed));
    }
    if !segment.is_empty() {
        blocks.push(parse_block(&segment)?);
    }
    Ok(blocks)
}

pub(crate) fn parse_block(lines: &[(usize, &str)]) -> Result<VectorBlock> {
    let (first_no, first) = lines[0];
    if lines.len() < 2 {
        return Err(Error::format_at(first_no, "block ends after the group id"));
    }
    let group_id = parse_group_id(first);
    let (sig_no, sig_text) = lines[1];
    let signature = Signature::parse(sig_text)
        .map_err(|e| Error::format_at(sig_no, format!("bad signature line: {e}")))?;
    let g0 = signature.orbit_genus() as usize;
    let r = signature.branch_count();

    let (class_tuple, row_lines): (Vec<usize>, &[(usize, &str)]) = if r > 0 {
        if lines.len() < 3 {
            return Err(Error::format_at(sig_no, "block ends before the class line"));
        }
        let (class_no, class_text) = lines[2];
        let tuple = parse_class_line(class_text)
            .map_err(|e| Error::format_at(class_no, format!("bad class line: {e}")))?;
        if tuple.len() != r {
            return Err(Error::format_at(
                class_no,
                format!("class line lists {} classes, signature has {}", tuple.len(), r),
            ));
        }
        (tuple, &lines[3..])
    } else {
        (Vec::new(), &lines[2..])
    };

    let expected = 2 * g0 + r;
    let (row_lines, marker) = if r == 0 {
        match row_lines.split_last() {
            Some((&(_, last), head)) if is_unramified_marker(last) => (head, true),
            _ => (row_lines, false),
        }
    } else {
        (row_lines, false)
    };
    if r == 0 && !marker {
        let at = row_lines.last().map(|&(n, _)| n).unwrap_or(sig_no);
        return Err(Error::format_at(
            at,
            "unramified block must end with a \"[ ]\" line",
        ));
    }
    if row_lines.len() != expected {
        let at = row_lines.last().map(|&(n, _)| n).unwrap_or(sig_no);
        return Err(Error::format_at(
            at,
            format!(
                "block has {} permutation rows, signature {} needs {}",
                row_lines.len(),
                signature,
                expected
            ),
        ));
    }

    let rows = parse_rows(row_lines)?;
    Ok(VectorBlock {
        group_id,
        signature,
        class_tuple,
        legacy_indexed: true,
        rows,
    })
}

fn is_unramified_marker(text: &str) -> bool {
    let inner = text.trim();
    inner
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .is_some_and(|t| t.trim().is_empty())
}

fn parse_class_line(text: &str) -> Result<Vec<usize>> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Format(format!("expected a bracketed class list: {text:?}")))?;
    let mut out = Vec::new();
    for piece in inner.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let k: usize = parse_int(piece, "class index")?;
        if k == 0 {
            return Err(Error::Format("class indices are 1-based".to_string()));
        }
        out.push(k);
    }
    Ok(out)
}

/// Parses image rows at a shared degree: the maximum point named by any row.
/// Rows shorter than the degree are padded with fixed points.
fn parse_rows(lines: &[(usize, &str)]) -> Result<Vec<Permutation>> {
    let mut raw: Vec<(usize, Vec<u16>)> = Vec::with_capacity(lines.len());
    let mut degree: usize = 0;
    for &(no, text) in lines {
        let mut images = Vec::new();
        for token in text.split_whitespace() {
            let v: u16 = token.parse().map_err(|_| {
                Error::format_at(no, format!("bad image row entry {token:?}"))
            })?;
            if v == 0 {
                return Err(Error::format_at(no, "points are 1-based"));
            }
            images.push(v);
            degree = degree.max(v as usize);
        }
        degree = degree.max(images.len());
        raw.push((no, images));
    }
    let mut rows = Vec::with_capacity(raw.len());
    for (no, mut images) in raw {
        for p in images.len()..degree {
            images.push(p as u16 + 1);
        }
        let perm = Permutation::from_images(images)
            .map_err(|e| Error::format_at(no, format!("row is not a bijection: {e}")))?;
        rows.push(perm);
    }
    Ok(rows)
}

impl From<&EpimorphismRecord> for VectorBlock {
    fn from(rec: &EpimorphismRecord) -> Self {
        VectorBlock {
            group_id: rec.group.label.clone(),
            signature: rec.signature.clone(),
            class_tuple: rec.con.clone(),
            legacy_indexed: false,
            rows: rec.genimages.entries(),
        }
    }
}

/// Serializes one block, including its closing `*` line.
pub fn write_vector_block(block: &VectorBlock) -> String {
    let mut out = String::new();
    out.push_str(&block_group_line(&block.group_id));
    out.push('\n');
    out.push_str(&spaced_list(flat_numbers(&block.signature)));
    out.push('\n');
    let r = block.signature.branch_count();
    if r > 0 {
        out.push_str(&spaced_list(
            block.class_tuple.iter().map(|k| k.to_string()).collect(),
        ));
        out.push('\n');
    }
    for p in &block.rows {
        out.push_str(&p.image_row());
        out.push('\n');
    }
    if r == 0 {
        out.push_str("[ ]\n");
    }
    out.push_str("*\n");
    out
}

/// Serializes records as star-separated blocks, one `*` line after each.
pub fn write_vector_blocks(records: &[EpimorphismRecord]) -> String {
    records
        .iter()
        .map(|rec| write_vector_block(&VectorBlock::from(rec)))
        .collect()
}

fn block_group_line(label: &GroupLabel) -> String {
    match label.legacy_id {
        Some((order, id)) => format!("({},{})", order, id),
        None => label.text.clone(),
    }
}

fn flat_numbers(sig: &Signature) -> Vec<String> {
    let mut out = vec![sig.orbit_genus().to_string()];
    out.extend(sig.periods().iter().map(|m| m.to_string()));
    out
}

fn spaced_list(items: Vec<String>) -> String {
    if items.is_empty() {
        return "[ ]".to_string();
    }
    format!("[ {} ]", items.join(", "))
}

/// Parses bracket-row entries, one per line:
/// `[ group ][ signature ][ classes ][ cycle-notation vector ]`.
pub fn parse_bracket_rows(text: &str) -> Result<Vec<VectorBlock>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        out.push(parse_bracket_row(no, trimmed)?);
    }
    Ok(out)
}

pub(crate) fn parse_bracket_row(no: usize, line: &str) -> Result<VectorBlock> {
    let fields = bracket_fields(no, line)?;
    if fields.len() != 4 {
        return Err(Error::format_at(
            no,
            format!("expected 4 bracket groups, found {}", fields.len()),
        ));
    }
    let group_id = parse_group_id_bare(&fields[0]);
    let signature = Signature::parse(&fields[1])
        .map_err(|e| Error::format_at(no, format!("bad signature field: {e}")))?;
    let class_tuple = parse_class_line(&format!("[{}]", fields[2]))
        .map_err(|e| Error::format_at(no, format!("bad class field: {e}")))?;
    let r = signature.branch_count();
    if class_tuple.len() != r {
        return Err(Error::format_at(
            no,
            format!("class field lists {} classes, signature has {}", class_tuple.len(), r),
        ));
    }

    let pieces = split_outside_parens(&fields[3]);
    let degree = max_point_in_cycles(no, &fields[3])?;
    let mut rows = Vec::with_capacity(pieces.len());
    for piece in &pieces {
        let perm = Permutation::parse_cycles(piece, Some(degree))
            .map_err(|e| Error::format_at(no, format!("bad cycle expression {piece:?}: {e}")))?;
        rows.push(perm);
    }
    let expected = 2 * signature.orbit_genus() as usize + r;
    if rows.len() != expected {
        return Err(Error::format_at(
            no,
            format!(
                "entry has {} permutations, signature {} needs {}",
                rows.len(),
                signature,
                expected
            ),
        ));
    }
    Ok(VectorBlock {
        group_id,
        signature,
        class_tuple,
        legacy_indexed: true,
        rows,
    })
}

/// Group field of a bracket row: `504, 156` (no parentheses) or a label.
fn parse_group_id_bare(text: &str) -> GroupLabel {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() == 2 {
        if let (Ok(order), Ok(id)) = (
            parts[0].trim().parse::<u128>(),
            parts[1].trim().parse::<u64>(),
        ) {
            return GroupLabel::legacy(order, id);
        }
    }
    GroupLabel::text_only(text.trim())
}

fn bracket_fields(no: usize, line: &str) -> Result<Vec<String>> {
    let mut fields = Vec::new();
    let mut rest = line;
    while !rest.trim().is_empty() {
        let rest_trim = rest.trim_start();
        let Some(after) = rest_trim.strip_prefix('[') else {
            return Err(Error::format_at(
                no,
                format!("expected \"[\" at {:?}", truncate(rest_trim)),
            ));
        };
        let close = after.find(']').ok_or_else(|| {
            Error::format_at(no, "bracket group is never closed")
        })?;
        fields.push(after[..close].to_string());
        rest = &after[close + 1..];
    }
    Ok(fields)
}

fn truncate(text: &str) -> String {
    text.chars().take(20).collect()
}

fn split_outside_parens(text: &str) -> Vec<String> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            ',' if depth == 0 => {
                if !current.trim().is_empty() {
                    pieces.push(current.trim().to_string());
                }
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if !current.trim().is_empty() {
        pieces.push(current.trim().to_string());
    }
    pieces
}

fn max_point_in_cycles(no: usize, text: &str) -> Result<u16> {
    let mut degree: u16 = 0;
    let mut number = String::new();
    for ch in text.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_digit() {
            number.push(ch);
        } else if !number.is_empty() {
            let v: u16 = number
                .parse()
                .map_err(|_| Error::format_at(no, format!("point {number:?} is out of range")))?;
            degree = degree.max(v);
            number.clear();
        }
    }
    Ok(degree.max(1))
}

/// Serializes records as bracket rows, permutations in cycle notation.
pub fn write_bracket_rows(records: &[EpimorphismRecord]) -> String {
    let mut out = String::new();
    for rec in records {
        let group_field = match rec.group.label.legacy_id {
            Some((order, id)) => format!("{}, {}", order, id),
            None => rec.group.label.text.clone(),
        };
        let cycles: Vec<String> = rec
            .genimages
            .hyperbolic
            .iter()
            .chain(rec.genimages.branch.iter())
            .map(|p| p.cycle_string())
            .collect();
        out.push_str(&format!(
            "[ {} ]{}{}{}\n",
            group_field,
            spaced_list(flat_numbers(&rec.signature)),
            spaced_list(rec.con.iter().map(|k| k.to_string()).collect()),
            spaced_list(cycles),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_group, GroupSpec, LabeledGroup};
    use crate::genvec::{is_generating_vector, GeneratingVector};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    const GENUS7_BLOCKS: &str = "\
(504,156)
[ 0, 2, 3, 7 ]
[ 2, 3, 4 ]
1 6 4 3 9 2 8 7 5
4 5 8 9 6 2 3 7 1
5 2 8 1 6 9 7 4 3
*
(504,156)
[ 0, 2, 3, 7 ]
[ 2, 3, 5 ]
1 6 4 3 9 2 8 7 5
4 8 9 6 3 1 2 7 5
2 8 9 1 5 3 7 6 4
*
(504,156)
[ 0, 2, 3, 7 ]
[ 2, 3, 6 ]
1 6 4 3 9 2 8 7 5
6 4 2 3 1 5 8 9 7
9 4 3 6 2 1 5 8 7
*
";

    const GENUS7_ROWS: &str = "\
[ 504, 156 ][ 0, 2, 3, 7 ][ 5, 6, 2 ][ (2,3)(4,6)(5,8)(7,9), (1,2,9)(3,4,6)(5,8,7), (1,7,5,9,3,4,2) ]
[ 504, 156 ][ 0, 2, 3, 7 ][ 5, 6, 3 ][ (2,3)(4,6)(5,8)(7,9), (1,2,4)(3,5,8)(6,9,7), (1,6,9,4,3,5,2) ]
[ 504, 156 ][ 0, 2, 3, 7 ][ 5, 6, 4 ][ (2,3)(4,6)(5,8)(7,9), (1,2,5)(3,9,7)(4,6,8), (1,8,4,5,3,9,2) ]
";

    #[test]
    fn parses_the_genus_seven_line() {
        let line = parse_group_signature_line("[*7, 504, [0,2,3,7], ( 504,156 ) *]").unwrap();
        assert_eq!(line.genus, 7);
        assert_eq!(line.order, 504);
        assert_eq!(line.signature, Signature::new(0, vec![2, 3, 7]).unwrap());
        assert_eq!(line.group_id, GroupLabel::legacy(504, 156));
        assert_eq!(
            write_group_signature_line(&line),
            "[*7, 504, [0,2,3,7], ( 504,156 ) *]"
        );
    }

    #[test]
    fn parses_the_trivial_group_line() {
        let line = parse_group_signature_line("[*2, 1, [2], ( 1,1 ) *]").unwrap();
        assert_eq!(line.genus, 2);
        assert_eq!(line.order, 1);
        assert_eq!(line.signature, Signature::unramified(2));
        assert_eq!(line.group_id, GroupLabel::legacy(1, 1));
    }

    #[test]
    fn rejects_unterminated_line() {
        assert!(parse_group_signature_line("[*7, 504, [0,2,3,7]").is_err());
    }

    #[test]
    fn synthesized_line_round_trips() {
        let line = GroupSignatureLine::new(
            7,
            504,
            Signature::new(0, vec![2, 3, 7]).unwrap(),
            GroupLabel::legacy(504, 156),
        );
        assert_eq!(line.raw, "[*7, 504, [0,2,3,7], ( 504,156 ) *]");
        let back = parse_group_signature_line(&line.raw).unwrap();
        assert_eq!(back, line);
    }

    #[test]
    fn parses_the_genus_seven_blocks() {
        let blocks = parse_vector_blocks(GENUS7_BLOCKS).unwrap();
        assert_eq!(blocks.len(), 3);
        let tuples: Vec<Vec<usize>> = blocks.iter().map(|b| b.class_tuple.clone()).collect();
        assert_eq!(tuples, vec![vec![2, 3, 4], vec![2, 3, 5], vec![2, 3, 6]]);
        for block in &blocks {
            assert_eq!(block.group_id, GroupLabel::legacy(504, 156));
            assert_eq!(block.signature, Signature::new(0, vec![2, 3, 7]).unwrap());
            assert!(block.legacy_indexed);
            assert_eq!(block.rows.len(), 3);
            for row in &block.rows {
                assert_eq!(row.degree(), 9);
            }
        }
        assert_eq!(
            blocks[0].rows[0].cycle_string(),
            "(2,6)(3,4)(5,9)(7,8)"
        );
    }

    #[test]
    fn blocks_parse_without_trailing_star() {
        let text = GENUS7_BLOCKS.trim_end_matches("*\n").to_string();
        let blocks = parse_vector_blocks(&text).unwrap();
        assert_eq!(blocks.len(), 3);
    }

    #[test]
    fn empty_file_gives_no_blocks() {
        assert!(parse_vector_blocks("").unwrap().is_empty());
        assert!(parse_vector_blocks("\n  \n").unwrap().is_empty());
    }

    #[test]
    fn rejects_non_bijective_row() {
        let text = "(6,1)\n[ 0, 2, 2, 2 ]\n[ 1, 1, 1 ]\n1 1 2\n1 2 3\n1 2 3\n*\n";
        let err = parse_vector_blocks(text).unwrap_err();
        assert!(err.to_string().contains("bijection"), "{err}");
    }

    #[test]
    fn rejects_row_count_mismatch() {
        let text = "(6,1)\n[ 0, 2, 2, 2 ]\n[ 1, 1, 1 ]\n1 2 3\n1 2 3\n*\n";
        let err = parse_vector_blocks(text).unwrap_err();
        assert!(err.to_string().contains("needs 3"), "{err}");
    }

    #[test]
    fn unramified_block_round_trips() {
        let text = "(2,1)\n[ 1 ]\n2 1\n1 2\n[ ]\n*\n";
        let blocks = parse_vector_blocks(text).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].signature, Signature::unramified(1));
        assert!(blocks[0].class_tuple.is_empty());
        assert_eq!(blocks[0].rows.len(), 2);
    }

    #[test]
    fn unramified_block_requires_marker() {
        let text = "(2,1)\n[ 1 ]\n2 1\n1 2\n*\n";
        assert!(parse_vector_blocks(text).is_err());
    }

    #[test]
    fn parses_the_genus_seven_bracket_rows() {
        let entries = parse_bracket_rows(GENUS7_ROWS).unwrap();
        assert_eq!(entries.len(), 3);
        for entry in &entries {
            assert_eq!(entry.group_id, GroupLabel::legacy(504, 156));
            assert_eq!(entry.signature, Signature::new(0, vec![2, 3, 7]).unwrap());
            assert_eq!(entry.rows.len(), 3);
            assert_eq!(entry.rows[0].degree(), 9);
            let orders: Vec<u128> = entry.rows.iter().map(|p| p.order()).collect();
            assert_eq!(orders, vec![2, 3, 7]);
        }
        assert_eq!(
            entries[0].class_tuple,
            vec![5, 6, 2],
            "legacy indices are kept verbatim"
        );
        assert!(entries[0].legacy_indexed);
    }

    #[test]
    fn cycle_identity_and_fixed_points() {
        let entry = parse_bracket_rows("[ 2, 1 ][ 1 ][ ][ (), (1,2) ]").unwrap();
        assert_eq!(entry.len(), 1);
        assert!(entry[0].rows[0].is_identity());
        assert_eq!(entry[0].rows[0].degree(), 2);
        let wide = parse_bracket_rows("[ 9, 1 ][ 1 ][ ][ (2,3), (1,9) ]").unwrap();
        assert_eq!(wide[0].rows[0].degree(), 9);
        assert_eq!(wide[0].rows[0].apply(4), 4);
    }

    #[test]
    fn rejects_unbalanced_bracket_row() {
        assert!(parse_bracket_rows("[ 504, 156 ][ 0, 2, 3, 7 ").is_err());
        assert!(parse_bracket_rows("[ 504, 156 ][ 0, 2, 3, 7 ][ 1, 1, 1 ][ (1,2 ]").is_err());
    }

    fn records_for(spec: &str, sig: Signature) -> (LabeledGroup, Vec<EpimorphismRecord>) {
        let lg = build_group(&GroupSpec::parse(spec).unwrap()).unwrap();
        let records = crate::genvec::representatives_epimorphisms(
            &lg,
            &sig,
            &crate::genvec::Budgets::default(),
        )
        .unwrap();
        (lg, records)
    }

    #[test]
    fn block_write_parse_is_structural_identity() {
        let (lg, records) = records_for("symmetric:3", Signature::new(0, vec![2, 2, 3, 3]).unwrap());
        assert!(!records.is_empty());
        let text = write_vector_blocks(&records);
        let blocks = parse_vector_blocks(&text).unwrap();
        assert_eq!(blocks.len(), records.len());
        for (block, rec) in blocks.iter().zip(&records) {
            assert_eq!(block.group_id.text, rec.group.label.text);
            assert_eq!(block.signature, rec.signature);
            assert_eq!(block.class_tuple, rec.con);
            assert_eq!(block.rows, rec.genimages.entries());
            assert!(is_generating_vector(
                &lg.group,
                &block.signature,
                &GeneratingVector::from_entries(
                    block.signature.orbit_genus(),
                    block.rows.clone(),
                    block.class_tuple.clone(),
                )
            ));
        }
    }

    #[test]
    fn bracket_write_parse_is_structural_identity() {
        let (_, records) = records_for("cyclic:6", Signature::new(0, vec![2, 3, 6]).unwrap());
        assert!(!records.is_empty());
        let text = write_bracket_rows(&records);
        let entries = parse_bracket_rows(&text).unwrap();
        assert_eq!(entries.len(), records.len());
        for (entry, rec) in entries.iter().zip(&records) {
            assert_eq!(entry.signature, rec.signature);
            assert_eq!(entry.class_tuple, rec.con);
            assert_eq!(entry.rows, rec.genimages.entries());
        }
    }

    #[test]
    fn cross_format_consistency_on_the_genus_seven_data() {
        let blocks = parse_vector_blocks(GENUS7_BLOCKS).unwrap();
        let entries = parse_bracket_rows(GENUS7_ROWS).unwrap();
        let block_group =
            crate::group::PermGroup::new(9, blocks[0].rows.clone()).unwrap();
        let row_group = crate::group::PermGroup::new(9, entries[0].rows.clone()).unwrap();
        assert_eq!(block_group.order(), 504);
        assert_eq!(row_group.order(), 504);
        for entry in &entries {
            for row in &entry.rows {
                assert!(block_group.contains(row));
            }
        }
    }

    #[test]
    fn randomized_structural_round_trips() {
        let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
        let pool: Vec<(LabeledGroup, Vec<EpimorphismRecord>)> = vec![
            records_for("abelian:2,2", Signature::new(0, vec![2, 2, 2, 2]).unwrap()),
            records_for("cyclic:3", Signature::new(0, vec![3, 3, 3]).unwrap()),
            records_for("cyclic:2", Signature::unramified(2)),
            records_for("cyclic:2", Signature::new(1, vec![2, 2]).unwrap()),
            records_for("symmetric:3", Signature::new(0, vec![2, 2, 3, 3]).unwrap()),
            records_for("cyclic:6", Signature::new(0, vec![2, 3, 6]).unwrap()),
        ];
        for _ in 0..500 {
            let mut chosen: Vec<EpimorphismRecord> = Vec::new();
            for (_, records) in &pool {
                for rec in records {
                    if rng.gen_bool(0.4) {
                        chosen.push(rec.clone());
                    }
                }
            }
            let text = write_vector_blocks(&chosen);
            let blocks = parse_vector_blocks(&text).unwrap();
            assert_eq!(blocks.len(), chosen.len());
            for (block, rec) in blocks.iter().zip(&chosen) {
                assert_eq!(block.signature, rec.signature);
                assert_eq!(block.class_tuple, rec.con);
                assert_eq!(block.rows, rec.genimages.entries());
            }
            let rows_text = write_bracket_rows(&chosen);
            let entries = parse_bracket_rows(&rows_text).unwrap();
            assert_eq!(entries.len(), chosen.len());
            for (entry, rec) in entries.iter().zip(&chosen) {
                assert_eq!(entry.signature, rec.signature);
                assert_eq!(entry.class_tuple, rec.con);
                assert_eq!(entry.rows, rec.genimages.entries());
            }
        }
    }
}
