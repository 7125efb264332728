"""Fingerprint-based text similarity: schemes, features, index, CLI."""

__version__ = "0.1.0"

from .detector import (
    ALL_FEATURES,
    DEFAULT_FEATURES,
    CorpusIndex,
    Detector,
    DetectorConfig,
    FeatureReport,
    IndexEntry,
    IndexFormatError,
    IndexVersionError,
    analyze_pair,
    build_index,
    load_index,
    rank_candidates,
    save_index,
)
from .features import (
    DEFAULT_QUERY_PHRASES,
    KeywordSet,
    LcsResult,
    QueryPhraseHit,
    extract_query_phrase_sentences,
    first_sentence_similarity,
    lcs_fmeasure,
    lcs_similarity,
    load_query_phrases,
    query_phrase_similarity,
    top_keyword_similarity,
    top_keywords,
)
from .fingerprint import (
    GramMultiset,
    GramWeights,
    ResemblanceScore,
    SentenceFingerprint,
    char_kgrams,
    document_fingerprints,
    full_resemblance,
    gram_weights,
    jaccard,
    least_frequent_fingerprint,
    statement_resemblance,
    word_trigrams,
)
from .kernels import LCS_BACKEND, lcs_length
from .porter import stem
from .textprep import (
    Document,
    Preprocessor,
    Sentence,
    load_stopwords,
    normalize,
    split_sentences,
    tokenize,
)

__all__ = [
    "__version__",
    "ALL_FEATURES",
    "DEFAULT_FEATURES",
    "DEFAULT_QUERY_PHRASES",
    "LCS_BACKEND",
    "CorpusIndex",
    "Detector",
    "DetectorConfig",
    "Document",
    "FeatureReport",
    "GramMultiset",
    "GramWeights",
    "IndexEntry",
    "IndexFormatError",
    "IndexVersionError",
    "KeywordSet",
    "LcsResult",
    "Preprocessor",
    "QueryPhraseHit",
    "ResemblanceScore",
    "Sentence",
    "SentenceFingerprint",
    "analyze_pair",
    "build_index",
    "char_kgrams",
    "document_fingerprints",
    "extract_query_phrase_sentences",
    "first_sentence_similarity",
    "full_resemblance",
    "gram_weights",
    "jaccard",
    "lcs_fmeasure",
    "lcs_length",
    "lcs_similarity",
    "least_frequent_fingerprint",
    "load_index",
    "load_query_phrases",
    "load_stopwords",
    "normalize",
    "query_phrase_similarity",
    "rank_candidates",
    "save_index",
    "split_sentences",
    "statement_resemblance",
    "stem",
    "tokenize",
    "top_keyword_similarity",
    "top_keywords",
    "word_trigrams",
]
