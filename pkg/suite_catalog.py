"""One-line descriptions of the verification suites."""

from __future__ import annotations

from typing import Dict

DESCRIPTIONS: Dict[str, str] = {
    "dyck-statistics": "udu count equals u-peak count; peak bounds; Catalan many paths per half-length.",
    "p-bijection": "P and its inverse are mutually inverse bijections onto all Dyck paths.",
    "d-bijection": "D is injective and hits every Dyck path of half-length l+1.",
    "akop-shape": "lambda^m <= lambda <= lambda^M, rectangles tile the gap, word lengths match.",
    "prop-4.1": "udu count of D(lambda) equals l - 2#U - #L and the running u_j values.",
    "prop-6.1": "l + 1 - peaks(D(sigma(Phi))) equals #Phi_min.",
    "prop-6.2": "peaks(P(sigma(Phi))) - 1 equals #Phi_min.",
    "theorem-5.1": "udu count of D(sigma(Phi)) equals #I_Phi = l - 2#U - #L.",
    "psi-lemma": "Psi is a bijection Phi_min -> A with Psi(L) = L-entries and Psi(U) = U-entries.",
    "duality": "the dual map is injective and sends #Phi_min = p to l - p.",
    "census": "udu and I_Phi censuses match the closed formula; antichain sizes are Narayana.",
    "f-i-monotone": "Phi lies in F_I exactly when I is contained in I_Phi.",
    "lie-oracle": "matrix-unit bracket test agrees with the combinatorial F_I test.",
}


def describe_suite(name: str) -> str:
    return DESCRIPTIONS.get(name, "No description available for this suite.")
