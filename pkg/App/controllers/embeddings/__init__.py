# App/controllers/embeddings/__init__.py
from .EmbeddingSpec import EmbeddingSpec
from .ClassicalEmbedding import ClassicalEmbedding
from .RotationEmbedding import RotationEmbedding
from .DiagonalPairEmbedding import DiagonalPairEmbedding
from .ScalarCounterEmbedding import ScalarCounterEmbedding
from .BlockCounterEmbedding import BlockCounterEmbedding
from .AlphabetReductionEmbedding import AlphabetReductionEmbedding
from .Catalog import Catalog, catalog
from .embedding_client import embedding_client
from .words import (
    AlphabetReduction,
    Component,
    count_component,
    count_elements,
    enumerate_component,
    enumerate_shard,
    format_element,
    multiply_elements,
    parse_element,
    reduce_word,
)

__all__ = [
    'EmbeddingSpec',
    'ClassicalEmbedding',
    'RotationEmbedding',
    'DiagonalPairEmbedding',
    'ScalarCounterEmbedding',
    'BlockCounterEmbedding',
    'AlphabetReductionEmbedding',
    'Catalog',
    'catalog',
    'embedding_client',
    'AlphabetReduction',
    'Component',
    'count_component',
    'count_elements',
    'enumerate_component',
    'enumerate_shard',
    'format_element',
    'multiply_elements',
    'parse_element',
    'reduce_word',
]
