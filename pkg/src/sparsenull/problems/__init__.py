from .generators import (gen_hardness_instance, gen_unsparsifiable, random_full_rank,
                         random_invertible, random_matrix, random_sparse_vector, random_vector,
                         stacked_unsparsifiable)
from .harness import ProblemSpec, ReductionReport, ReductionWitness, Violation, verify_exact_reduction
from .instances import (EdrInstance, InstanceError, MsInstance, MuInstance, RelaxedInstance,
                        SivInstance, SnsInstance)
from .reductions import (TriviallySatisfiable, edr_to_mu, ms_to_sns, mu_to_edr, mu_to_siv,
                         sns_to_ms)

__all__ = [
    "EdrInstance", "InstanceError", "MsInstance", "MuInstance", "ProblemSpec", "ReductionReport",
    "ReductionWitness", "RelaxedInstance", "SivInstance", "SnsInstance", "TriviallySatisfiable",
    "Violation", "edr_to_mu", "gen_hardness_instance", "gen_unsparsifiable", "ms_to_sns",
    "mu_to_edr", "mu_to_siv", "random_full_rank", "random_invertible", "random_matrix",
    "random_sparse_vector", "random_vector", "sns_to_ms", "stacked_unsparsifiable",
    "verify_exact_reduction",
]
