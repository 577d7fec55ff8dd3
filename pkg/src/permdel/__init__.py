"""Perfect single-deletion-correcting permutation codes.

Permutations of {0, ..., n-1} are identified with digit vectors through a
suffix-rotation factorization; fixing the digit sum modulo n carves the
symmetric group into n codebooks of (n-1)! codewords, each of which corrects
one symbol deletion.  Encoding and decoding both run in quasi-linear time.
"""

from .codec import (
    CodeParams,
    DecodeResult,
    DigitMessage,
    decode,
    digits_from_message,
    encode,
    membership,
    message_from_digits,
)
from .errors import (
    BoundExceededError,
    DigitOutOfRangeError,
    DuplicateInsertError,
    DuplicateSymbolError,
    IndexOutOfRangeError,
    InvalidRepVectorError,
    InvalidSymbolsError,
    LengthMismatchError,
    MessageOutOfRangeError,
    NotACodewordError,
    ParamOutOfRangeError,
    PermdelError,
    SymbolOutOfRangeError,
    WrongLengthError,
)
from .oracle import (
    PerfectnessReport,
    certify_partition,
    check_parity_lemmas,
    check_perfect,
    enumerate_code,
    find_parity_lemma_violation,
    vt_signature_check,
)
from .perms import (
    DeletedWord,
    Permutation,
    compose,
    delete_at,
    deletion_ball,
    identity,
    inverse,
    parse_permutation,
    permutation_text,
    suffix_rotation,
    transposition,
    validate,
)
from .represent import (
    BitProfile,
    ParityProfile,
    RepVector,
    b_sequence,
    insertion_parities,
    parity,
    parse_rep_vector,
    rep_fast,
    rep_inverse_fast,
    rep_inverse_naive,
    rep_naive,
    rep_vector_text,
    shifted_mod,
)
from .structures import InsertableSequence, RankedSet

__version__ = "0.1.0"

__all__ = [
    "BitProfile",
    "BoundExceededError",
    "CodeParams",
    "DecodeResult",
    "DeletedWord",
    "DigitMessage",
    "DigitOutOfRangeError",
    "DuplicateInsertError",
    "DuplicateSymbolError",
    "IndexOutOfRangeError",
    "InsertableSequence",
    "InvalidRepVectorError",
    "InvalidSymbolsError",
    "LengthMismatchError",
    "MessageOutOfRangeError",
    "NotACodewordError",
    "ParamOutOfRangeError",
    "ParityProfile",
    "PerfectnessReport",
    "PermdelError",
    "Permutation",
    "RankedSet",
    "RepVector",
    "SymbolOutOfRangeError",
    "WrongLengthError",
    "b_sequence",
    "certify_partition",
    "check_parity_lemmas",
    "check_perfect",
    "compose",
    "decode",
    "delete_at",
    "deletion_ball",
    "digits_from_message",
    "encode",
    "enumerate_code",
    "find_parity_lemma_violation",
    "identity",
    "insertion_parities",
    "inverse",
    "membership",
    "message_from_digits",
    "parity",
    "parse_permutation",
    "parse_rep_vector",
    "permutation_text",
    "rep_fast",
    "rep_inverse_fast",
    "rep_inverse_naive",
    "rep_naive",
    "rep_vector_text",
    "shifted_mod",
    "suffix_rotation",
    "transposition",
    "validate",
    "vt_signature_check",
]
