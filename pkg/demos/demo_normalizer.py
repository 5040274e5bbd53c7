"""Playground for the symbolic algebra normalizer.

The rewriting uses only isomorphism-level identities: matrix tensor
collapse, unit elision, distribution of finite powers over tensor words,
and absorption of matrix factors into compacts.  Stable isomorphisms are
left alone, so K (x) C(T) does not simplify.
"""

from ratmap.algebra import (
    CantorAlg,
    CircleAlg,
    Compacts,
    CompactsOn,
    DirectSum,
    FinitePower,
    Matrix,
    Scalars,
    Tensor,
    dimension,
    normalize,
    render,
)

examples = [
    Tensor([Matrix(1), CircleAlg()]),
    Tensor([FinitePower(Scalars(), 2), Matrix(1)]),
    Tensor([Matrix(2), Matrix(2)]),
    Tensor([Matrix(1), CircleAlg(), FinitePower(Scalars(), 2)]),
    Tensor([Compacts(), Matrix(5)]),
    Tensor([Compacts(), CantorAlg()]),
    Tensor([CompactsOn("q", None), CircleAlg()]),
    Tensor([CompactsOn("c", 3), CircleAlg()]),
    DirectSum([Tensor([Matrix(2), CircleAlg()]), Tensor([CircleAlg(), Matrix(2)])]),
]

for e in examples:
    n = normalize(e)
    dim = dimension(e)
    dim_txt = f"  (dim {dim})" if dim is not None else ""
    print(f"{render(e):50s} ->  {render(n)}{dim_txt}")

print()
print("normalization is idempotent and ignores the order of factors:")
a = Tensor([CircleAlg(), Matrix(2)])
b = Tensor([Matrix(2), CircleAlg()])
print(f"   normalize({render(a)}) == normalize({render(b)}):",
      normalize(a) == normalize(b))
