//! Text grammar for group identifiers.
//!
//! ```text
//! A(n) | PSL(n,q) | PSU(n,q) | PSp(2n,q) | Omega(2n+1,q) | POmega+(2n,q)
//!      | POmega-(2n,q) | 2B2(q) | 3D4(q) | G2(q) | 2G2(q) | F4(q) | 2F4(q)
//!      | E6(q) | 2E6(q) | E7(q) | E8(q) | <sporadic name>
//! ```
//!
//! Family tags are case-insensitive; sporadic names are exact. Whitespace
//! inside the parentheses is ignored.

use super::{GroupError, GroupId, LieFamily, LieGroup, Sporadic};

enum Arg {
    Num(u64),
    Q,
}

struct Call<'a> {
    tag: String,
    args: Vec<Arg>,
    input: &'a str,
}

fn split_call(input: &str) -> Result<Option<Call<'_>>, GroupError> {
    let trimmed = input.trim();
    let Some(open) = trimmed.find('(') else {
        return Ok(None);
    };
    if !trimmed.ends_with(')') {
        return Err(GroupError::syntax(input, "missing closing parenthesis"));
    }
    let tag = trimmed[..open].trim().to_ascii_uppercase();
    let inner: String = trimmed[open + 1..trimmed.len() - 1]
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    if inner.contains('(') || inner.contains(')') {
        return Err(GroupError::syntax(input, "nested parentheses"));
    }
    let args = inner
        .split(',')
        .map(|a| match a {
            "q" | "Q" => Ok(Arg::Q),
            _ => a
                .parse::<u64>()
                .map(Arg::Num)
                .map_err(|_| GroupError::syntax(input, format!("expected a number, got {a:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Some(Call { tag, args, input }))
}

fn family_from_tag(call: &Call<'_>) -> Result<(LieFamily, usize), GroupError> {
    let classical = |make: fn(u32) -> LieFamily| (make(0), 2usize);
    let fam = match call.tag.as_str() {
        "PSL" => classical(LieFamily::Psl),
        "PSU" => classical(LieFamily::Psu),
        "PSP" => classical(LieFamily::Psp),
        "OMEGA" => classical(LieFamily::OmegaOdd),
        "POMEGA+" => classical(LieFamily::POmegaPlus),
        "POMEGA-" => classical(LieFamily::POmegaMinus),
        "2B2" => (LieFamily::Suzuki, 1),
        "3D4" => (LieFamily::TriD4, 1),
        "G2" => (LieFamily::G2, 1),
        "2G2" => (LieFamily::Ree, 1),
        "F4" => (LieFamily::F4, 1),
        "2F4" => (LieFamily::TwistedF4, 1),
        "E6" => (LieFamily::E6, 1),
        "2E6" => (LieFamily::TwistedE6, 1),
        "E7" => (LieFamily::E7, 1),
        "E8" => (LieFamily::E8, 1),
        other => {
            return Err(GroupError::syntax(
                call.input,
                format!("unknown family tag {other:?}"),
            ))
        }
    };
    if call.args.len() != fam.1 {
        return Err(GroupError::syntax(
            call.input,
            format!("{} takes {} argument(s)", fam.0.tag(), fam.1),
        ));
    }
    Ok(fam)
}

/// Converts the written degree (`n`, `2n` or `2n+1`) into the rank parameter.
fn rank_from_degree(call: &Call<'_>, family: LieFamily, degree: u64) -> Result<u32, GroupError> {
    let degree =
        u32::try_from(degree).map_err(|_| GroupError::syntax(call.input, "degree out of range"))?;
    let rank = match family {
        LieFamily::Psl(_) | LieFamily::Psu(_) => Some(degree),
        LieFamily::Psp(_) | LieFamily::POmegaPlus(_) | LieFamily::POmegaMinus(_) => {
            (degree % 2 == 0).then_some(degree / 2)
        }
        LieFamily::OmegaOdd(_) => (degree % 2 == 1).then_some(degree / 2),
        _ => unreachable!(),
    };
    rank.ok_or_else(|| {
        GroupError::syntax(
            call.input,
            format!(
                "{} needs an {} degree",
                family.tag(),
                if matches!(family, LieFamily::OmegaOdd(_)) {
                    "odd"
                } else {
                    "even"
                }
            ),
        )
    })
}

fn lie_family<'c>(call: &'c Call<'_>) -> Result<(LieFamily, &'c Arg), GroupError> {
    let (family, arity) = family_from_tag(call)?;
    if arity == 1 {
        return Ok((family, &call.args[0]));
    }
    let Arg::Num(degree) = call.args[0] else {
        return Err(GroupError::syntax(call.input, "degree must be a number"));
    };
    let rank = rank_from_degree(call, family, degree)?;
    Ok((family.with_rank(rank), &call.args[1]))
}

/// Parses and validates a group identifier.
pub fn parse_group(text: &str) -> Result<GroupId, GroupError> {
    let Some(call) = split_call(text)? else {
        let name = text.trim();
        return Sporadic::from_name(name)
            .map(GroupId::Sporadic)
            .ok_or_else(|| GroupError::syntax(text, format!("unknown sporadic group {name:?}")));
    };
    if call.tag == "A" {
        return match call.args.as_slice() {
            [Arg::Num(n)] => {
                let n = u32::try_from(*n)
                    .map_err(|_| GroupError::syntax(text, "degree out of range"))?;
                GroupId::alternating(n)
            }
            _ => Err(GroupError::syntax(text, "A takes one numeric argument")),
        };
    }
    let (family, q) = lie_family(&call)?;
    match *q {
        Arg::Num(q) => LieGroup::new(family, q).map(GroupId::Lie),
        Arg::Q => Err(GroupError::syntax(text, "q must be a number here")),
    }
}

/// Parses a family pattern such as `PSL(4,q)` or `E8(q)`.
pub fn parse_family_pattern(text: &str) -> Result<LieFamily, GroupError> {
    let call = split_call(text)?
        .ok_or_else(|| GroupError::syntax(text, "expected a family pattern like PSL(4,q)"))?;
    let (family, q) = lie_family(&call)?;
    if !matches!(q, Arg::Q) {
        return Err(GroupError::syntax(
            text,
            "the field argument of a pattern must be q",
        ));
    }
    if let Some(n) = family.rank() {
        if n < family.min_rank() {
            return Err(GroupError::NotSimple {
                group: family.to_string(),
                reason: "rank below the simplicity bound",
            });
        }
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie(fam: LieFamily, q: u64) -> GroupId {
        GroupId::lie(fam, q).unwrap()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse_group("PSL(3,4)").unwrap(), lie(LieFamily::Psl(3), 4));
        assert_eq!(parse_group("2B2(8)").unwrap(), lie(LieFamily::Suzuki, 8));
        assert_eq!(
            parse_group("psl( 3 , 4 )").unwrap(),
            lie(LieFamily::Psl(3), 4)
        );
        assert_eq!(parse_group("PSp(4,3)").unwrap(), lie(LieFamily::Psp(2), 3));
        assert_eq!(
            parse_group("Omega(7,3)").unwrap(),
            lie(LieFamily::OmegaOdd(3), 3)
        );
        assert_eq!(
            parse_group("POmega-(8,2)").unwrap(),
            lie(LieFamily::POmegaMinus(4), 2)
        );
        assert_eq!(parse_group("e8(2)").unwrap(), lie(LieFamily::E8, 2));
        assert_eq!(parse_group("A(10)").unwrap(), GroupId::Alternating(10));
        assert_eq!(
            parse_group("Fi24'").unwrap(),
            GroupId::Sporadic(Sporadic::Fi24)
        );
        assert_eq!(parse_group(" M ").unwrap(), GroupId::Sporadic(Sporadic::M));
    }

    #[test]
    fn rejects_bad_syntax() {
        for bad in [
            "PSL(3,4",
            "PSL(3)",
            "PSL(3,4,5)",
            "XYZ(3)",
            "PSp(5,3)",
            "Omega(6,3)",
            "POmega+(7,2)",
            "m11",
            "PSL(3,x)",
            "A(q)",
            "",
        ] {
            let err = parse_group(bad).unwrap_err();
            assert!(err.is_syntax(), "{bad:?} gave {err:?}");
        }
    }

    #[test]
    fn rejects_invalid_groups() {
        assert_eq!(parse_group("PSL(2,2)").unwrap_err().code(), "not-simple");
        assert_eq!(
            parse_group("PSL(3,6)").unwrap_err().code(),
            "not-prime-power"
        );
        assert_eq!(
            parse_group("2G2(9)").unwrap_err().code(),
            "twisted-constraint"
        );
        assert_eq!(parse_group("A(4)").unwrap_err().code(), "not-simple");
    }

    #[test]
    fn patterns() {
        assert_eq!(parse_family_pattern("PSL(4,q)").unwrap(), LieFamily::Psl(4));
        assert_eq!(parse_family_pattern("e8(q)").unwrap(), LieFamily::E8);
        assert_eq!(
            parse_family_pattern("POmega+(8, q)").unwrap(),
            LieFamily::POmegaPlus(4)
        );
        assert!(parse_family_pattern("PSL(4,5)").is_err());
        assert!(parse_family_pattern("PSU(2,q)").is_err());
        assert_eq!(LieFamily::Psp(4).to_string(), "PSp(8,q)");
    }
}
