"""Lex Groebner bases of vanishing ideals of finite point sets.

The basis is built directly from the points: a fiber-count decomposition
attaches one multi-index to each block of the set, iterated Lagrange
interpolation produces one monic generator per index, and the construction
recurses through the coordinate projections.  Independent oracles
(Buchberger-Moller, S-polynomial tests) certify every artifact.
"""

from .errors import (ArityMismatch, DivisionByZero, DuplicatePoint,
                     FieldMismatch, InputError, InterpolationError,
                     LevelOutOfRange, LexpointError, NonPrimeModulus,
                     NonZeroDimensional, NothingToDelete, ScalarParseError,
                     SmallFieldWarning)
from .field import (Field, PrimeField, Rationals, Scalar, field_from_spec,
                    is_prime, parse_scalar)
from .poly import (Monomial, Polynomial, exact_divide, lex_compare, lex_key,
                   normal_form, product_of_linear)
from .points import PointSet, fiber, load_point_set, point_set_to_json, project
from .decomp import (Decomposition, IndexRecord, check_deletion_invariants,
                     enumerate_indices, families_for_index, fiber_score,
                     generator_records, minimal_monomial_exponents)
from .interp import (InterpFamilies, LagrangeBasis, StructureReport,
                     build_generator, evaluation_cofactor, interpolate_expanded,
                     iterated_interpolate, lagrange_basis, prefix_interpolant,
                     structure_certificate)
from .gblex import (GroebnerBasis, MINIMAL, REDUCED, groebner_basis,
                    groebner_tower, reduce_basis, standard_monomials)
from .oracle import (EvaluationMatrix, buchberger, buchberger_moller,
                     evaluation_matrix, is_groebner_basis, s_polynomial)
from .analysis import (SpecializationReport, TriangularCell, specialize,
                       triangular_decompose)

__version__ = "0.1.0"
