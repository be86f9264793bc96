"""genusmass: exact class-group, genus-character, and q-series machinery for
negative fundamental discriminants, plus a coefficientwise identity verifier."""

from .arith import (
    divisors,
    factorize,
    is_fundamental,
    is_fundamental_discriminant,
    kronecker,
    prime_discriminant_factorization,
)
from .class_group import (
    ClassGroup,
    IdealBasis,
    build_class_group,
    form_to_ideal,
    ideal_mul,
    ideal_to_form,
    prime_ideal_class,
)
from .forms import (
    QuadForm,
    automorph_count,
    reduce_form,
    reduced_forms,
    representation_count,
)
from .genus import (
    GenusCharacter,
    build_genus_characters,
    character_pairs,
    character_value,
    orthogonality_sum,
    represented_coprime_value,
)
from .hecke import (
    HeckeCheckResult,
    check_eigenform,
    check_genus_permutation,
    check_inert_theta,
    check_ramified_theta,
    check_split_theta,
)
from .qseries import QSeries, apply_T, apply_U, apply_V, qseries
from .series import (
    class_average,
    eisenstein_for_genus,
    eisenstein_series,
    genus_eisenstein,
    l_zero,
    theta_series,
    twisted_sum,
)
from .verify import (
    VerificationReport,
    run_suite,
    verify_character_counts,
    verify_dirichlet,
    verify_gauss,
    verify_genus_mass,
    verify_twisted_eisenstein,
)

__version__ = "0.1.0"
