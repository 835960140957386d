from .chain import Bicomplex, ChainComplex, Homology, kunneth, smith_homology, tensor, totalize
from .cosimplicial import (Cosimplicial, build_D, build_Dhat, free_crossed, miraculous,
                           nerve, nerve_complex)

__all__ = ["Bicomplex", "ChainComplex", "Homology", "kunneth", "smith_homology", "tensor",
           "totalize", "Cosimplicial", "build_D", "build_Dhat", "free_crossed", "miraculous",
           "nerve", "nerve_complex"]
