"""Hand-built objects shared by several test modules."""
from postlie.affine import Embedding
from postlie.lie import LieAlgebra
from postlie.matrix import PolyMatrix
from postlie.poly import standard_context

CTX3 = standard_context(3)
H3 = LieAlgebra("h3", 3, {(0, 1): [0, 0, 1]}, ctx=CTX3)
E2 = LieAlgebra("e2", 3, {(0, 1): [0, 0, 1], (0, 2): [0, -1, 0]}, ctx=CTX3)


def mat(ctx, text):
    return PolyMatrix(ctx, [r.split() for r in text.split(";")])


def euclid_embedding():
    """The isometry algebra of the plane acting simply transitively on h3."""
    t = [CTX3.parse(s) for s in ("x2", "x3", "x1")]
    D = mat(CTX3, "0 -x1 0; x1 0 0; 1/2*x3 -1/2*x2 0")
    return Embedding.from_generic(E2, H3, t, D)


EUCLID_L = "0 -x3 0; x3 0 0; 1/2*x2 -1/2*x1 0"
EUCLID_R = "0 0 -y2; 0 0 y1; -1/2*y2 1/2*y1 0"
