//! Small named ultragraphs used throughout the tests, benches and docs.
//! The `.ug` sources live in the crate's `fixtures/` directory.

use crate::dsl::parse_ultragraph;
use crate::model::Ultragraph;

pub const UG_LOOP: &str = include_str!("../fixtures/ug-loop.ug");
pub const UG_CHAIN: &str = include_str!("../fixtures/ug-chain.ug");
pub const UG_FAN: &str = include_str!("../fixtures/ug-fan.ug");
pub const UG_ROSE2: &str = include_str!("../fixtures/ug-rose2.ug");
pub const UG_MIX: &str = include_str!("../fixtures/ug-mix.ug");
pub const UG_SINKCYCLE: &str = include_str!("../fixtures/ug-sinkcycle.ug");
pub const UG_TAIL: &str = include_str!("../fixtures/ug-tail.ug");
pub const UG_CYCLE2: &str = include_str!("../fixtures/ug-cycle2.ug");
pub const UG_SPLIT: &str = include_str!("../fixtures/ug-split.ug");
pub const UG_POINT: &str = include_str!("../fixtures/ug-point.ug");

fn load(src: &str) -> Ultragraph {
    parse_ultragraph(src).expect("bundled fixture parses")
}

/// `v`, one loop `e : v -> {v}`.
pub fn ug_loop() -> Ultragraph {
    load(UG_LOOP)
}

/// `e : u -> {w}`.
pub fn ug_chain() -> Ultragraph {
    load(UG_CHAIN)
}

/// `e : u -> {w1, w2}`.
pub fn ug_fan() -> Ultragraph {
    load(UG_FAN)
}

/// Two loops at a single vertex.
pub fn ug_rose2() -> Ultragraph {
    load(UG_ROSE2)
}

/// `e : u -> {u, w}`, `f : w -> {u}`.
pub fn ug_mix() -> Ultragraph {
    load(UG_MIX)
}

/// `e : v -> {v, w}` with `w` a sink.
pub fn ug_sinkcycle() -> Ultragraph {
    load(UG_SINKCYCLE)
}

/// `e : u -> {v}`, `c : v -> {v}`.
pub fn ug_tail() -> Ultragraph {
    load(UG_TAIL)
}

/// `e1 : v1 -> {v2}`, `e2 : v2 -> {v1}`.
pub fn ug_cycle2() -> Ultragraph {
    load(UG_CYCLE2)
}

/// `e : u -> {v, x}`, `g : x -> {v}`, `c : v -> {v}`.
pub fn ug_split() -> Ultragraph {
    load(UG_SPLIT)
}

/// A single isolated vertex.
pub fn ug_point() -> Ultragraph {
    load(UG_POINT)
}

/// Every bundled fixture with its file stem.
pub fn all() -> Vec<(&'static str, Ultragraph)> {
    vec![
        ("ug-loop", ug_loop()),
        ("ug-chain", ug_chain()),
        ("ug-fan", ug_fan()),
        ("ug-rose2", ug_rose2()),
        ("ug-mix", ug_mix()),
        ("ug-sinkcycle", ug_sinkcycle()),
        ("ug-tail", ug_tail()),
        ("ug-cycle2", ug_cycle2()),
        ("ug-split", ug_split()),
        ("ug-point", ug_point()),
    ]
}
