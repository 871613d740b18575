"""Stability laboratory for the second-order uncertainty principle.

Thin wrapper over the C++ core: exact polynomial-Gaussian calculus, deficit
functionals, optimizer-manifold distances, sector stability constants, and
the verification suites.
"""

try:  # installed wheel layout: the extension lives inside the package
    from . import _hupstab as _core
except ImportError:  # build-tree layout: the extension sits on sys.path
    import _hupstab as _core

PolyGaussFn = _core.PolyGaussFn
energies = _core.energies
deficits = _core.deficits
hup_identity_rhs = _core.hup_identity_rhs
hessian_gaussian_energy = _core.hessian_gaussian_energy
radial_gaussian_poincare_gap = _core.radial_gaussian_poincare_gap
sphere_area = _core.sphere_area
eigenvalue_ck = _core.eigenvalue_ck
lower_bound = _core.lower_bound
k_of_n = _core.k_of_n
gaussian_quotient = _core.gaussian_quotient
dist_l2_to_hup = _core.dist_l2_to_hup
dist_grad_to_shup = _core.dist_grad_to_shup
dist_grad_norm_matched = _core.dist_grad_norm_matched
dist_vector_cfhup = _core.dist_vector_cfhup
dist_d2_partial = _core.dist_d2_partial
estimate_C = _core.estimate_C
estimate_C_N = _core.estimate_C_N
run_identity_suite = _core.run_identity_suite
run_inequality_suite = _core.run_inequality_suite
sharpness_probe = _core.sharpness_probe

__all__ = [
    "PolyGaussFn",
    "deficits",
    "dist_d2_partial",
    "dist_grad_norm_matched",
    "dist_grad_to_shup",
    "dist_l2_to_hup",
    "dist_vector_cfhup",
    "eigenvalue_ck",
    "energies",
    "estimate_C",
    "estimate_C_N",
    "gaussian_quotient",
    "hessian_gaussian_energy",
    "hup_identity_rhs",
    "k_of_n",
    "lower_bound",
    "radial_gaussian_poincare_gap",
    "run_identity_suite",
    "run_inequality_suite",
    "sharpness_probe",
    "sphere_area",
]
