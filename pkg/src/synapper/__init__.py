"""Toolkit for closed-loop sentence structures.

Build and validate structures, linearize them into any of the six word
orders, form and undo questions, translate by swapping lexemes and
morphemes while the structure stays fixed, measure how unlikely a chance
match is, and read/write the JSON, TSV and DOT formats.
"""

from .chance import ChanceProbability, NTooSmallError, chance_probability
from .io_formats import (
    MalformedSyntaxError,
    parse_lexicon,
    parse_profile,
    parse_structure,
    serialize_structure,
    to_dot,
)
from .linearize import (
    DegenerateStructureError,
    Direction,
    LinearSentence,
    PlacedToken,
    direction_of,
    linearize,
)
from .model import (
    Branch,
    Category,
    Constituent,
    DocumentError,
    Loop,
    LoopKind,
    MalformedDocumentError,
    Role,
    StructureDocument,
    StructureValidationError,
    Synapper,
    SynapperError,
    Token,
    UnknownKeyError,
    UnknownWordOrderError,
    ValidationIssue,
    WordOrder,
    build_synapper,
    canonical_form,
    iter_tokens,
    structural_equal,
    structure_issues,
)
from .profile import (
    BranchPlacementRule,
    BranchSide,
    LanguageProfile,
    MorphemeKind,
    MorphemeRule,
    PostOrder,
    VerbPlacement,
    WhRule,
)
from .transform import (
    InversionMismatchError,
    NoWhFoundError,
    WhAlreadyPresentError,
    WhToken,
    declarativize,
    interrogativize,
    normalize_subject_position,
    wh_token,
)
from .translate import (
    Lexicon,
    MissingLexemeError,
    apply_morpheme_rules,
    identity_lexicon,
    substitute_lexemes,
    translate,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "BranchPlacementRule",
    "BranchSide",
    "Category",
    "ChanceProbability",
    "Constituent",
    "DegenerateStructureError",
    "Direction",
    "DocumentError",
    "InversionMismatchError",
    "LanguageProfile",
    "Lexicon",
    "LinearSentence",
    "Loop",
    "LoopKind",
    "MalformedDocumentError",
    "MalformedSyntaxError",
    "MissingLexemeError",
    "MorphemeKind",
    "MorphemeRule",
    "NTooSmallError",
    "NoWhFoundError",
    "PlacedToken",
    "PostOrder",
    "Role",
    "StructureDocument",
    "StructureValidationError",
    "Synapper",
    "SynapperError",
    "Token",
    "UnknownKeyError",
    "UnknownWordOrderError",
    "ValidationIssue",
    "VerbPlacement",
    "WhAlreadyPresentError",
    "WhRule",
    "WhToken",
    "WordOrder",
    "apply_morpheme_rules",
    "build_synapper",
    "canonical_form",
    "chance_probability",
    "declarativize",
    "direction_of",
    "identity_lexicon",
    "interrogativize",
    "iter_tokens",
    "linearize",
    "normalize_subject_position",
    "parse_lexicon",
    "parse_profile",
    "parse_structure",
    "serialize_structure",
    "structural_equal",
    "structure_issues",
    "substitute_lexemes",
    "to_dot",
    "translate",
    "wh_token",
]
