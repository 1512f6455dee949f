//! Serde helpers writing big integers as bare JSON numbers.

use std::fmt::Display;
use std::str::FromStr;

use serde::ser::{Error, SerializeSeq};
use serde::{Serialize, Serializer};

fn number<E: Error>(v: &impl Display) -> Result<serde_json::Number, E> {
    serde_json::Number::from_str(&v.to_string()).map_err(E::custom)
}

pub(crate) fn big<S: Serializer, T: Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    number(v)?.serialize(s)
}

pub(crate) fn big_seq<S: Serializer, T: Display>(values: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&number::<S::Error>(v)?)?;
    }
    seq.end()
}
