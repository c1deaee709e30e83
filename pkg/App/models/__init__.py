from App.models.errors import *
from App.models.ring import RingId, QuadInt, QuadRat, EUCLIDEAN_DISCRIMINANTS
from App.models.matrix import Mat2, PslElement
from App.models.word import Block, WordRep, BoundReport
from App.models.report import ClaimReport
from App.models.free_word import FgWord, SgWord
from App.models.exact_matrix import SquareMatrix, ScalarKind, INTEGER, RATIONAL, GAUSSIAN_RATIONAL
