//! Moving instances between levels `t` and `t + 1` by appending a zero
//! coordinate. With hidden vector `n' = (n, 0)`, `h'·n' = h·n`, so the
//! lifted instance has the same DDH answer and DLOG solutions.

use super::{CdhOracle, DHInstance, DlogOracle};
use crate::blackbox::GroupElement;
use crate::Result;

pub fn lift_instance(inst: &DHInstance) -> DHInstance {
    DHInstance {
        g: inst.g().lift(),
        h: inst.h().lift(),
        k: inst.k().lift(),
        l: inst.l().map(GroupElement::lift),
    }
}

/// Drops the last coordinate of a level-`t+1` CDH answer.
pub fn project_cdh_answer(l: &GroupElement) -> Result<GroupElement> {
    l.project()
}

/// CDH at level `t` with a single call to a level-`t+1` CDH oracle.
#[derive(Debug)]
pub struct LoweredCdh<C> {
    inner: C,
    calls: u64,
}

impl<C: CdhOracle> LoweredCdh<C> {
    pub fn new(inner: C) -> Self {
        Self { inner, calls: 0 }
    }

    pub fn into_inner(self) -> C {
        self.inner
    }
}

impl<C: CdhOracle> CdhOracle for LoweredCdh<C> {
    fn cdh(&mut self, g: &GroupElement, h: &GroupElement, k: &GroupElement) -> Result<GroupElement> {
        self.calls += 1;
        let l = self.inner.cdh(&g.lift(), &h.lift(), &k.lift())?;
        project_cdh_answer(&l)
    }

    fn calls(&self) -> u64 {
        self.calls
    }
}

/// DLOG at level `t` answered by a level-`t+1` DLOG oracle on the lifted pair.
#[derive(Debug)]
pub struct LoweredDlog<D> {
    inner: D,
    calls: u64,
}

impl<D: DlogOracle> LoweredDlog<D> {
    pub fn new(inner: D) -> Self {
        Self { inner, calls: 0 }
    }
}

impl<D: DlogOracle> DlogOracle for LoweredDlog<D> {
    fn dlog(&mut self, g: &GroupElement, h: &GroupElement) -> Result<u64> {
        self.calls += 1;
        self.inner.dlog(&g.lift(), &h.lift())
    }

    fn calls(&self) -> u64 {
        self.calls
    }
}
