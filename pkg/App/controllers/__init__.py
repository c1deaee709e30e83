from .quadratic_ring import *
from .bianchi import *
from .word_repr import *
from .word_text import *
from .claim_verifier import *


from .embeddings import Catalog, catalog, embedding_client, AlphabetReduction
