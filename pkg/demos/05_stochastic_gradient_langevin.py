"""Stochastic-gradient Langevin kernels on a conjugate regression posterior.

The testbed is Bayesian linear regression with a Gaussian prior, where the
posterior mean and covariance are available in closed form, so the bias of
each minibatch kernel is directly measurable. SPGLD and SSGLD additionally
carry a small l1 term handled by proximal and subgradient steps.
"""

from functools import partial
from pathlib import Path

import numpy as np

from lmckit import (
    ChainState,
    CompositePotential,
    Prng,
    ShiftedL1,
    StepParams,
    linear_regression_demo,
    moment_summary,
    run_chain,
)
from lmckit.samplers import sgld_step, spgld_step, ssgld_step

OUT = Path(__file__).parent / "output" / "sg-demo"
OUT.mkdir(parents=True, exist_ok=True)

fs, post_mean, post_cov = linear_regression_demo(n=100, seed=7)
cp = CompositePotential(fs, ShiftedL1(0.1, np.zeros(fs.dim)), check_gradient=False)

params = StepParams(1e-3, lam=1e-3)
BATCH = 10
kernels = {
    "sgld": partial(sgld_step, fs=fs, batch_size=BATCH, params=params),
    "spgld": partial(spgld_step, cp=cp, batch_size=BATCH, params=params),
    "ssgld": partial(ssgld_step, cp=cp, batch_size=BATCH, params=params),
}

print(f"closed-form posterior mean {np.round(post_mean, 4)}")
for stream, (name, kernel) in enumerate(kernels.items(), start=1):
    chain = run_chain(
        kernel, ChainState(x=np.zeros(fs.dim), rng=Prng(1, stream)), 100_000, burn_in=10_000
    )
    mean, cov = moment_summary(chain.samples)
    err = np.abs(mean - post_mean).max()
    print(f"{name:6s} sample mean {np.round(mean, 4)}  (max gap to closed form {err:.4f})")
    np.savetxt(OUT / f"samples_{name}.csv", chain.samples, delimiter=",", fmt="%.17g")

print("\nSGLD targets the Gaussian posterior (up to discretization bias);")
print("the l1 variants shift the mean slightly toward the origin.")
print(f"sample files written to {OUT}")
