use super::Status::{self, Proved as P, Quoted as Q, Unproved as S};

/// `(name, status, description, lhs, rhs)`. Quotient identities are stored
/// cross-multiplied.
pub(super) const CATALOGUE: &[(&str, Status, &str, &str, &str)] = &[
    // Theta functions and their products.
    ("19III", P, "Jacobi triple product at a = q, b = q^2",
     "f(q, q^2)", "poch(-q, 3, inf) * poch(-q^2, 3, inf) * poch(q^3, 3, inf)"),
    ("19III-half", P, "Jacobi triple product at a = -q^(1/2), b = -q^(5/2)",
     "f(-q^(1/2), -q^(5/2))", "poch(q^(1/2), 3, inf) * poch(q^(5/2), 3, inf) * poch(q^3, 3, inf)"),
    ("22i", P, "phi as a product",
     "phi(q)", "poch(-q, 2, inf)^2 * poch(q^2, 2, inf)"),
    ("22i-kappa", P, "phi(q) = kappa(q)^2 E(q^2)",
     "phi(q)", "kappa(q)^2 * E(q^2)"),
    ("22ii", P, "psi as a quotient of products",
     "psi(q) * poch(q, 2, inf)", "poch(q^2, 2, inf)"),
    ("22iii", P, "E(q) = f(-q, -q^2) = (q; q)_inf",
     "E(q)", "poch(q, 1, inf)"),
    ("22iii-eta", P, "eta = q^(1/24) (q; q)_inf",
     "eta()", "q^(1/24) * poch(q, 1, inf)"),
    ("tdis", P, "even-odd dissection of phi",
     "phi(q)", "phi(q^4) + 2 * q * psi(q^8)"),
    ("pdis", P, "even-odd dissection of psi",
     "psi(q)", "f(q^6, q^10) + q * f(q^2, q^14)"),
    ("trsdis", P, "dissection of phi(q) phi(q^39)",
     "phi(q) * phi(q^39)",
     "phi(q^4) * phi(q^156) + 4 * q^40 * psi(q^8) * psi(q^312) + 2 * q^39 * phi(q^4) * psi(q^312) + 2 * q * phi(q^156) * psi(q^8)"),
    ("a1", P, "5-dissection of phi",
     "phi(q)", "phi(q^25) + 2 * q * f(q^15, q^35) + 2 * q^4 * f(q^5, q^45)"),
    // Rogers-Ramanujan functions.
    ("ghd-G", P, "G(q) = f(-q^2, -q^3) / E(q)",
     "G(q) * E(q)", "f(-q^2, -q^3)"),
    ("ghd-H", P, "H(q) = f(-q, -q^4) / E(q)",
     "H(q) * E(q)", "f(-q, -q^4)"),
    ("ghp", P, "G(q) H(q) = E(q^5) / E(q)",
     "G(q) * H(q) * E(q)", "E(q^5)"),
    ("gh2dis-G", P, "odd-even dissection of G",
     "G(q) * E(q^2)", "E(q^8) * (G(q^16) + q * H(-q^4))"),
    ("gh2dis-H", P, "odd-even dissection of H",
     "H(q) * E(q^2)", "E(q^8) * (q^3 * H(q^16) + G(-q^4))"),
    ("a2-A", P, "f(q^3, q^7) = E(q^2) H(q) G(q^4)",
     "f(q^3, q^7)", "E(q^2) * H(q) * G(q^4)"),
    ("a2-B", P, "f(q, q^9) = E(q^2) G(q) H(q^4)",
     "f(q, q^9)", "E(q^2) * G(q) * H(q^4)"),
    ("ram2", Q, "G(q)G(q^4) + qH(q)H(q^4) = phi(q) / E(q^2)",
     "(G(q) * G(q^4) + q * H(q) * H(q^4)) * E(q^2)", "phi(q)"),
    ("ram3", Q, "G(q)G(q^4) - qH(q)H(q^4) = phi(q^5) / E(q^2)",
     "(G(q) * G(q^4) - q * H(q) * H(q^4)) * E(q^2)", "phi(q^5)"),
    ("b1", Q, "5-dissection of E(q) E(q^5)",
     "E(q) * E(q^5)",
     "f(-q^10, -q^15)^2 - q^2 * f(-q^5, -q^20)^2 - q * E(q^5) * E(q^25)"),
    ("b2", P, "E(q) / E(q^5) = G(q^5)^2 - q^2 H(q^5)^2 - q E(q^25) / E(q^5)",
     "E(q)", "(G(q^5)^2 - q^2 * H(q^5)^2) * E(q^5) - q * E(q^25)"),
    // Hecke action on eta products, sum and difference cases.
    ("thr3p1-1-119", P, "T5(eta(t) eta(119t)), r + s divisible by 5",
     "T5(eta() * eta(q^119))", "eta() * eta(q^119) * (q^(-2) * U(1, 119))^2"),
    ("thr3p1-49-71", P, "T5(eta(49t) eta(71t)), r + s divisible by 5",
     "T5(eta(q^49) * eta(q^71))", "eta(q^49) * eta(q^71) * (q^(-2) * U(49, 71))^2"),
    ("thr3p2-7-17", P, "T5(eta(7t) eta(17t)), r - s divisible by 5",
     "T5(eta(q^7) * eta(q^17))", "-eta(q^7) * eta(q^17) * (q * U(7, 17))^2"),
    ("thr3p2-19-29", P, "T5(eta(19t) eta(29t)), r - s divisible by 5",
     "T5(eta(q^19) * eta(q^29))", "-eta(q^19) * eta(q^29) * (q^3 * U(19, 29))^2"),
    ("b5-1-4", P, "U5(E(q^r)E(q^s)) + q^((r+s)/5) E(q^5r)E(q^5s) = E(q^r)E(q^s)U(r,s)^2 at (1,4)",
     "U5(E(q) * E(q^4)) + q * E(q^5) * E(q^20)", "E(q) * E(q^4) * U(1, 4)^2"),
    ("b5-2-3", P, "U5 identity for E(q^r)E(q^s) at (2,3)",
     "U5(E(q^2) * E(q^3)) + q * E(q^10) * E(q^15)", "E(q^2) * E(q^3) * U(2, 3)^2"),
    ("b5-3-7", P, "U5 identity for E(q^r)E(q^s) at (3,7)",
     "U5(E(q^3) * E(q^7)) + q^2 * E(q^15) * E(q^35)", "E(q^3) * E(q^7) * U(3, 7)^2"),
    ("he1-1-4", P, "2 phi phi + T5(phi phi), sum case (1,4)",
     "2 * phi(q) * phi(q^4) + T5(phi(q) * phi(q^4))",
     "4 * E(q^2) * E(q^8) * U(1, 4) * U(4, 16)"),
    ("he2-1-4", P, "2 phi phi - T5(phi phi), sum case (1,4)",
     "2 * phi(q) * phi(q^4) - T5(phi(q) * phi(q^4))",
     "4 * q * E(q^2) * E(q^8) * U(1, 16) * U(4, 4)"),
    ("he1-2-3", P, "2 phi phi + T5(phi phi), sum case (2,3)",
     "2 * phi(q^2) * phi(q^3) + T5(phi(q^2) * phi(q^3))",
     "4 * E(q^4) * E(q^6) * U(2, 3) * U(8, 12)"),
    ("he2-2-3", P, "2 phi phi - T5(phi phi), sum case (2,3)",
     "2 * phi(q^2) * phi(q^3) - T5(phi(q^2) * phi(q^3))",
     "4 * q^2 * E(q^4) * E(q^6) * U(2, 12) * U(8, 3)"),
    ("he1-1-14", P, "2 phi phi + T5(phi phi), sum case (1,14)",
     "2 * phi(q) * phi(q^14) + T5(phi(q) * phi(q^14))",
     "4 * E(q^2) * E(q^28) * U(1, 14) * U(4, 56)"),
    ("he2-1-14", P, "2 phi phi - T5(phi phi), sum case (1,14)",
     "2 * phi(q) * phi(q^14) - T5(phi(q) * phi(q^14))",
     "4 * q * E(q^2) * E(q^28) * U(1, 56) * U(4, 14)"),
    ("thr2a-1-6", P, "2 phi phi + T5(phi phi), difference case (1,6)",
     "2 * phi(q) * phi(q^6) + T5(phi(q) * phi(q^6))",
     "4 * E(q^2) * E(q^12) * U(1, 24) * U(6, 4)"),
    ("thr2b-1-6", P, "2 phi phi - T5(phi phi), difference case (1,6)",
     "2 * phi(q) * phi(q^6) - T5(phi(q) * phi(q^6))",
     "4 * q * E(q^2) * E(q^12) * U(1, 6) * U(4, 24)"),
    ("thr2a-2-7", P, "2 phi phi + T5(phi phi), difference case (2,7)",
     "2 * phi(q^2) * phi(q^7) + T5(phi(q^2) * phi(q^7))",
     "4 * E(q^4) * E(q^14) * U(2, 28) * U(7, 8)"),
    ("thr2b-2-7", P, "2 phi phi - T5(phi phi), difference case (2,7)",
     "2 * phi(q^2) * phi(q^7) - T5(phi(q^2) * phi(q^7))",
     "4 * q^2 * E(q^4) * E(q^14) * U(2, 7) * U(8, 28)"),
    ("thr2a-3-13", P, "2 phi phi + T5(phi phi), difference case (3,13)",
     "2 * phi(q^3) * phi(q^13) + T5(phi(q^3) * phi(q^13))",
     "4 * E(q^6) * E(q^26) * U(3, 52) * U(13, 12)"),
    ("thr2b-3-13", P, "2 phi phi - T5(phi phi), difference case (3,13)",
     "2 * phi(q^3) * phi(q^13) - T5(phi(q^3) * phi(q^13))",
     "4 * q^3 * E(q^6) * E(q^26) * U(3, 13) * U(12, 52)"),
    ("a7-1-4", P, "phi(q^r)phi(q^s) = E E (U(r,s)U(4r,4s) + q^r U(r,4s)U(4r,s)) at (1,4)",
     "phi(q) * phi(q^4)",
     "E(q^2) * E(q^8) * (U(1, 4) * U(4, 16) + q * U(1, 16) * U(4, 4))"),
    ("a7-2-3", P, "phi(q^r)phi(q^s) = E E (U(r,s)U(4r,4s) + q^r U(r,4s)U(4r,s)) at (2,3)",
     "phi(q^2) * phi(q^3)",
     "E(q^4) * E(q^6) * (U(2, 3) * U(8, 12) + q^2 * U(2, 12) * U(8, 3))"),
    // The R family.
    ("qrr", P, "(2,1,5) as an R function",
     "form(2, 1, 5)", "R(0, 0, 0, 0, 1, 39, 1, 4, 10)"),
    ("prt1", P, "parameter change between two R functions for (2,1,5)",
     "R(0, 0, 0, 0, 1, 39, 1, 4, 10)", "R(0, 0, 0, 0, 3, 13, -3, 4, 10)"),
    ("prtt1", P, "exchange of summation indices in R",
     "R(0, 1, 0, 1, 9, 39, 1, 3, 16)", "R(1, 0, 1, 0, 1, 351, 9, 16, 27)"),
    // Discriminants -39 and -156.
    ("215R", P, "R(0,0,0,0,1,39,1,4,10) as a sum of theta products",
     "R(0, 0, 0, 0, 1, 39, 1, 4, 10)",
     "f(q^2, q^2) * f(q^78, q^78) + 2 * q^5 * f(q, q^3) * f(q^39, q^117) + q^20 * f(1, q^4) * f(1, q^156)"),
    ("215R-b", P, "R(0,0,0,0,3,13,-3,4,10) as a sum of theta products",
     "R(0, 0, 0, 0, 3, 13, -3, 4, 10)",
     "f(q^6, q^6) * f(q^26, q^26) + 2 * q^2 * f(q^3, q^9) * f(q^13, q^39) + q^8 * f(1, q^12) * f(1, q^52)"),
    ("215a", P, "(2,1,5) in phi and psi, first form",
     "form(2, 1, 5)",
     "phi(q^2) * phi(q^78) + 2 * q^5 * psi(q) * psi(q^39) + 4 * q^20 * psi(q^4) * psi(q^156)"),
    ("215b", P, "(2,1,5) in phi and psi, second form",
     "form(2, 1, 5)",
     "phi(q^6) * phi(q^26) + 2 * q^2 * psi(q^3) * psi(q^13) + 4 * q^8 * psi(q^12) * psi(q^52)"),
    ("1110", P, "(1,1,10) in phi and psi",
     "form(1, 1, 10)", "phi(q) * phi(q^39) + 4 * q^10 * psi(q^2) * psi(q^78)"),
    ("334", P, "(3,3,4) in phi and psi",
     "form(3, 3, 4)", "phi(q^3) * phi(q^13) + 4 * q^4 * psi(q^6) * psi(q^26)"),
    ("528a", P, "(5,2,8) in theta products, first form",
     "form(5, 2, 8)",
     "phi(q^24) * phi(q^104) + 2 * q^8 * psi(q^12) * psi(q^52) + 4 * q^32 * psi(q^48) * psi(q^208) + 2 * q^5 * f(q^6, q^42) * f(q^78, q^130) + 2 * q^15 * f(q^18, q^30) * f(q^26, q^182)"),
    ("528b", P, "(5,2,8) in theta products, second form",
     "form(5, 2, 8)",
     "phi(q^8) * phi(q^312) + 2 * q^20 * psi(q^4) * psi(q^156) + 4 * q^80 * psi(q^16) * psi(q^624) + 2 * q^5 * f(q^234, q^390) * f(q^6, q^10) + 2 * q^45 * f(q^78, q^546) * f(q^2, q^14)"),
    ("ap2", P, "2q^2 E(q^2)E(q^78) U(1,39) U(1,39,-q)",
     "2 * q^2 * E(q^2) * E(q^78) * U(1, 39) * U(1, 39; -q)",
     "form(1, 1, 10) + form(2, 1, 5) - form(1, 0, 39) - form(5, 2, 8)"),
    ("ap3", P, "2q^2 E(q^6)E(q^26) U(3,13) U(3,13,-q)",
     "2 * q^2 * E(q^6) * E(q^26) * U(3, 13) * U(3, 13; -q)",
     "form(3, 0, 13) + form(2, 1, 5) - form(3, 3, 4) - form(5, 2, 8)"),
    ("ap4", P, "((3,0,13)-(5,2,8)) / ((1,0,39)+(5,2,8)) as a psi quotient",
     "(form(3, 0, 13) - form(5, 2, 8)) * psi(-q^3) * psi(-q^13)",
     "q^3 * psi(-q) * psi(-q^39) * (form(1, 0, 39) + form(5, 2, 8))"),
    ("ap5", P, "quotient of form combinations equals a phi quotient",
     "(form(1, 1, 10) + form(2, 1, 5) - form(1, 0, 39) - form(5, 2, 8)) * phi(-q^2) * phi(-q^78)",
     "phi(-q^6) * phi(-q^26) * (form(3, 0, 13) + form(2, 1, 5) - form(3, 3, 4) - form(5, 2, 8))"),
    ("fpr1", P, "4E(q^2)E(q^78)U(1,39)U(1,39,q^4) = 2(1,0,39) + 2(5,2,8)",
     "4 * E(q^2) * E(q^78) * U(1, 39) * U(1, 39; q^4)",
     "2 * form(1, 0, 39) + 2 * form(5, 2, 8)"),
    ("fpr1-t5", P, "T5(1,0,39) = 2(5,2,8)",
     "T5(form(1, 0, 39))", "2 * form(5, 2, 8)"),
    ("fpr1-dis", P, "odd-even splitting of E(q^2)E(q^78)U(1,39)",
     "E(q^2) * E(q^78) * U(1, 39)",
     "E(q^8) * E(q^312) * (U(1, 39; q^16) + q^8 * U(1, 39; -q^4) + q * U(1, 156; -q^4) + q^39 * U(39, 4; -q^4))"),
    ("fpr1-even", P, "even part of the (1,0,39) relation",
     "2 * E(q^8) * E(q^312) * (U(1, 39; q^16) + q^8 * U(1, 39; -q^4)) * U(1, 39; q^4)",
     "form(1, 1, 10; q^4) + form(2, 1, 5; q^4)"),
    ("fpr7", P, "4q^3E(q^6)E(q^26)U(3,13)U(3,13,q^4) = 2(3,0,13) - 2(5,2,8)",
     "4 * q^3 * E(q^6) * E(q^26) * U(3, 13) * U(3, 13; q^4)",
     "2 * form(3, 0, 13) - 2 * form(5, 2, 8)"),
    ("fpr7-t5", P, "T5(3,0,13) = 2(5,2,8)",
     "T5(form(3, 0, 13))", "2 * form(5, 2, 8)"),
    ("rmp", Q, "E(q)E(q^39)U(1,39) = E(q^3)E(q^13)U(3,13)",
     "E(q) * E(q^39) * U(1, 39)", "E(q^3) * E(q^13) * U(3, 13)"),
    ("rem1", P, "2E(q^3)E(q^13)U(1,39) = (1,1,10) + (2,1,5)",
     "2 * E(q^3) * E(q^13) * U(1, 39)", "form(1, 1, 10) + form(2, 1, 5)"),
    ("rem2", P, "2q^2E(q)E(q^39)U(3,13) = (2,1,5) - (3,3,4)",
     "2 * q^2 * E(q) * E(q^39) * U(3, 13)", "form(2, 1, 5) - form(3, 3, 4)"),
    ("rem3", P, "2qE(q)E(q^39)U(1,39) = (1,1,10) - (3,3,4)",
     "2 * q * E(q) * E(q^39) * U(1, 39)", "form(1, 1, 10) - form(3, 3, 4)"),
    ("rem4", P, "2qE(q^3)E(q^13)U(3,13) = (1,1,10) - (3,3,4)",
     "2 * q * E(q^3) * E(q^13) * U(3, 13)", "form(1, 1, 10) - form(3, 3, 4)"),
    ("rem-sqrt", P, "square of the (2,1,5)-(3,3,4) quotient, cross-multiplied",
     "(form(2, 1, 5) - form(3, 3, 4)) * (form(1, 1, 10) - form(3, 3, 4))^2",
     "(form(2, 1, 5) - form(3, 3, 4))^2 * (form(1, 1, 10) + form(2, 1, 5))"),
    ("rem-ratio", P, "middle equality of the -39 quotient chain",
     "(form(2, 1, 5) - form(3, 3, 4)) * (form(1, 1, 10) + form(2, 1, 5))",
     "(form(1, 1, 10) - form(3, 3, 4))^2"),
    ("rem-eta", P, "((1,1,10)-(3,3,4)) / ((1,1,10)+(2,1,5)) as an eta quotient",
     "(form(1, 1, 10) - form(3, 3, 4)) * E(q^3) * E(q^13)",
     "q * E(q) * E(q^39) * (form(1, 1, 10) + form(2, 1, 5))"),
    // Discriminant -351.
    ("tk1", P, "(2,1,44) - (8,1,11) = 2q^2 E(q^9)E(q^39)",
     "form(2, 1, 44) - form(8, 1, 11)", "2 * q^2 * E(q^9) * E(q^39)"),
    ("tk2", P, "(5,3,18) - (8,1,11) = 2q^5 E(q^3)E(q^117)",
     "form(5, 3, 18) - form(8, 1, 11)", "2 * q^5 * E(q^3) * E(q^117)"),
    ("tk3", P, "(4,1,22) - (10,7,10) = 2q^4 E(q^9)E(q^39) U(3,13,q^3)^2",
     "form(4, 1, 22) - form(10, 7, 10)", "2 * q^4 * E(q^9) * E(q^39) * U(3, 13; q^3)^2"),
    ("tk4", P, "(1,1,88) - (9,3,10) = 2q E(q^3)E(q^117) U(1,39,q^3)^2",
     "form(1, 1, 88) - form(9, 3, 10)", "2 * q * E(q^3) * E(q^117) * U(1, 39; q^3)^2"),
    ("tk5", P, "first equality of the -351 quotient chain",
     "(form(4, 1, 22) - form(10, 7, 10)) * (form(2, 1, 44) - form(8, 1, 11))",
     "(form(5, 3, 18) - form(8, 1, 11)) * (form(1, 1, 88) - form(9, 3, 10))"),
    ("tk5-eta", P, "((5,3,18)-(8,1,11)) / ((2,1,44)-(8,1,11)) as an eta quotient",
     "(form(5, 3, 18) - form(8, 1, 11)) * E(q^9) * E(q^39)",
     "q^3 * E(q^3) * E(q^117) * (form(2, 1, 44) - form(8, 1, 11))"),
    ("tk6", P, "(2,1,44) in phi and psi",
     "form(2, 1, 44)",
     "phi(q^2) * phi(q^702) + 2 * q^44 * psi(q) * psi(q^351) + 4 * q^176 * psi(q^4) * psi(q^1404)"),
    ("tk6-R", P, "(2,1,44) as an R function",
     "form(2, 1, 44)", "R(0, 0, 0, 0, 1, 351, 1, 4, 88)"),
    ("tk7", P, "(8,1,11) in theta products",
     "form(8, 1, 11)",
     "phi(q^8) * phi(q^2808) + 2 * q^11 * f(q^7, q^9) * f(q^2457, q^3159) + 2 * q^44 * f(q^6, q^10) * f(q^2106, q^3510) + 2 * q^99 * f(q^5, q^11) * f(q^1755, q^3861) + 2 * q^176 * psi(q^4) * psi(q^1404) + 2 * q^275 * f(q^3, q^13) * f(q^1053, q^4563) + 2 * q^396 * f(q^2, q^14) * f(q^702, q^4914) + 2 * q^539 * f(q, q^15) * f(q^351, q^5265) + 4 * q^704 * psi(q^16) * psi(q^5616)"),
    ("tk7-R", P, "(8,1,11) as an R function",
     "form(8, 1, 11)", "R(0, 0, 0, 0, 1, 351, 1, 16, 22)"),
    ("tk11", P, "(2,1,44) - (8,1,11) in theta products",
     "form(2, 1, 44) - form(8, 1, 11)",
     "2 * q^2 * psi(q^16) * phi(q^2808) - 2 * q^11 * f(q^7, q^9) * f(q^2457, q^3159) + 2 * q^45 * f(q^2, q^14) * f(q^2106, q^3510) - 2 * q^99 * f(q^5, q^11) * f(q^1755, q^3861) + 2 * q^176 * f(q^4, q^12) * f(q^1404, q^4212) - 2 * q^275 * f(q^3, q^13) * f(q^1053, q^4563) + 2 * q^395 * f(q^6, q^10) * f(q^702, q^4914) - 2 * q^539 * f(q, q^15) * f(q^351, q^5265) + 2 * q^702 * phi(q^8) * psi(q^5616)"),
    ("tk11-R", P, "R(1,0,1,0,1,351,9,16,27) = (2,1,44) - (8,1,11)",
     "R(1, 0, 1, 0, 1, 351, 9, 16, 27)", "form(2, 1, 44) - form(8, 1, 11)"),
    ("tk-R", P, "R(0,1,0,1,9,39,1,3,16) = 2q^2 E(q^9)E(q^39)",
     "R(0, 1, 0, 1, 9, 39, 1, 3, 16)", "2 * q^2 * E(q^9) * E(q^39)"),
    ("tk-t5-2-1-44", P, "T5(2,1,44) = (9,3,10) + (10,7,10)",
     "T5(form(2, 1, 44))", "form(9, 3, 10) + form(10, 7, 10)"),
    ("tk-t5-8-1-11", P, "T5(8,1,11) = (4,1,22) + (9,3,10)",
     "T5(form(8, 1, 11))", "form(4, 1, 22) + form(9, 3, 10)"),
    ("tk-t5-eta", P, "T5(2q^2 E(q^9)E(q^39)) = (10,7,10) - (4,1,22)",
     "T5(2 * q^2 * E(q^9) * E(q^39))", "form(10, 7, 10) - form(4, 1, 22)"),
    ("bse1", P, "(E(q^3)E(q^13)U(3,13))^2 = (E(q)E(q^39)U(1,39))^2",
     "(E(q^3) * E(q^13) * U(3, 13))^2", "(E(q) * E(q^39) * U(1, 39))^2"),
    ("bse1-b", P, "(E(q)E(q^39)U(1,39))^2 in phi and psi",
     "(E(q) * E(q^39) * U(1, 39))^2",
     "phi(-q^2) * phi(-q^78) * psi(-q^13) * psi(-q^3) - q^3 * phi(-q^26) * phi(-q^6) * psi(-q) * psi(-q^39)"),
    ("bse-kappa", P, "U(1,39)U(3,13) in kappa quotients",
     "U(1, 39) * U(3, 13)",
     "kappa(q) * kappa(q^39) / (kappa(-q^6) * kappa(-q^26)) - q^3 * kappa(q^13) * kappa(q^3) / (kappa(-q^78) * kappa(-q^2))"),
    // Discriminant -71.
    ("tkmm1", P, "2q^3 E(q)E(q^71) = (3,1,6) - (4,3,5)",
     "2 * q^3 * E(q) * E(q^71)", "form(3, 1, 6) - form(4, 3, 5)"),
    ("tkmm2", P, "2q E(q)E(q^71) U(1,71)^2",
     "2 * q * E(q) * E(q^71) * U(1, 71)^2",
     "form(3, 1, 6) - form(4, 3, 5) - form(2, 1, 9) + form(1, 1, 18)"),
    ("tkmm3", P, "2q^2 E(q)E(q^71) U(1,71) = (2,1,9) - (3,1,6)",
     "2 * q^2 * E(q) * E(q^71) * U(1, 71)", "form(2, 1, 9) - form(3, 1, 6)"),
    ("tkmm4", P, "2qU(1,71,q^2) in kappa products",
     "2 * q * U(1, 71; q^2)",
     "-2 * q^3 + kappa(q) * kappa(q^71) - kappa(-q) * kappa(-q^71) - 2 * q^9 / (kappa(-q^2) * kappa(-q^142))"),
    ("tkmm4-E", P, "2q^4 E(q^2)E(q^142) U(1,71,q^2) in E products",
     "2 * q^4 * E(q^2) * E(q^142) * U(1, 71; q^2)",
     "q^3 * E(-q) * E(-q^71) - q^3 * E(q) * E(q^71) - 2 * q^12 * E(q^4) * E(q^284) - 2 * q^6 * E(q^2) * E(q^142)"),
    ("tkmm5", P, "quadratic relation among the -71 form combinations",
     "(form(3, 1, 6) - form(4, 3, 5) - form(2, 1, 9) + form(1, 1, 18)) * (form(3, 1, 6) - form(4, 3, 5))",
     "(form(2, 1, 9) - form(3, 1, 6))^2"),
    ("tkmm6", P, "R(0,1,0,1,1,71,3,5,16) in theta products",
     "R(0, 1, 0, 1, 1, 71, 3, 5, 16)",
     "2 * q^2 * f(-q, -q^4) * f(-q^142, -q^213) - 2 * q^16 * f(-q^2, -q^3) * f(-q^71, -q^284)"),
    ("tkmm6-U", P, "R(0,1,0,1,1,71,3,5,16) = 2q^2 E(q)E(q^71) U(1,71)",
     "R(0, 1, 0, 1, 1, 71, 3, 5, 16)", "2 * q^2 * E(q) * E(q^71) * U(1, 71)"),
    ("tkmm-t5-3-1-6", P, "T5(3,1,6) = (4,3,5) + (2,1,9)",
     "T5(form(3, 1, 6))", "form(4, 3, 5) + form(2, 1, 9)"),
    ("tkmm-t5-4-3-5", P, "T5(4,3,5) = (3,1,6) + (1,1,18)",
     "T5(form(4, 3, 5))", "form(3, 1, 6) + form(1, 1, 18)"),
    ("oiu", P, "R(0,1,0,1,1,71,3,5,16) after exchanging indices",
     "R(0, 1, 0, 1, 1, 71, 3, 5, 16)", "R(1, 0, 1, 0, 1, 71, 3, 16, 5)"),
    ("oiu-b", P, "R(1,0,1,0,1,71,3,16,5) in theta products",
     "R(1, 0, 1, 0, 1, 71, 3, 16, 5)",
     "2 * q^2 * psi(q^16) * phi(q^568) - 2 * q^3 * f(q^3, q^13) * f(q^497, q^639) + 2 * q^9 * f(q^6, q^10) * f(q^426, q^710) - 2 * q^20 * f(q^7, q^9) * f(q^355, q^781) + 2 * q^36 * psi(q^4) * psi(q^284) - 2 * q^57 * f(q, q^15) * f(q^213, q^923) + 2 * q^81 * f(q^2, q^14) * f(q^142, q^994) - 2 * q^109 * f(q^5, q^11) * f(q^71, q^1065) + 2 * q^142 * phi(q^8) * psi(q^1136)"),
    ("atk5", P, "(2,1,9) in phi and psi",
     "form(2, 1, 9)",
     "phi(q^2) * phi(q^142) + 2 * q^9 * psi(q) * psi(q^71) + 4 * q^36 * psi(q^4) * psi(q^284)"),
    ("atk5-R", P, "(2,1,9) as an R function",
     "form(2, 1, 9)", "R(0, 0, 0, 0, 1, 71, 1, 4, 18)"),
    ("atk7", P, "(3,1,6) in theta products",
     "form(3, 1, 6)",
     "phi(q^8) * phi(q^568) + 2 * q^3 * f(q^3, q^13) * f(q^497, q^639) + 2 * q^10 * f(q^2, q^14) * f(q^426, q^710) + 2 * q^20 * f(q^7, q^9) * f(q^355, q^781) + 2 * q^36 * psi(q^4) * psi(q^284) + 2 * q^57 * f(q, q^15) * f(q^213, q^923) + 2 * q^80 * f(q^6, q^10) * f(q^142, q^994) + 2 * q^109 * f(q^5, q^11) * f(q^71, q^1065) + 4 * q^144 * psi(q^16) * psi(q^1136)"),
    ("atk7-R", P, "(3,1,6) as two R functions",
     "R(0, 0, 0, 0, 1, 71, 1, 12, 6)", "R(0, 0, 0, 0, 1, 71, -5, 16, 6)"),
    ("435", P, "(4,3,5) in theta products",
     "form(4, 3, 5)",
     "phi(q^4) * phi(q^284) + 2 * q^5 * f(q, q^7) * f(q^213, q^355) + 2 * q^18 * psi(q^2) * psi(q^142) + 2 * q^40 * f(q^3, q^5) * f(q^71, q^497) + 4 * q^72 * psi(q^8) * psi(q^568)"),
    ("435-R", P, "(4,3,5) as an R function",
     "form(4, 3, 5)", "R(0, 0, 0, 0, 1, 71, 3, 8, 10)"),
    ("435-b", P, "(4,3,5) with the even part of phi(q)phi(q^71)",
     "2 * form(4, 3, 5)",
     "phi(q) * phi(q^71) + phi(-q) * phi(-q^71) + 4 * q^18 * psi(q^2) * psi(q^142) + 4 * q^5 * f(q, q^7) * f(q^213, q^355) + 4 * q^40 * f(q^3, q^5) * f(q^71, q^497)"),
    ("dfe8", P, "2(4,3,5,q^2) in phi and psi",
     "2 * form(4, 3, 5; q^2)",
     "phi(q^2) * phi(q^142) + phi(-q^2) * phi(-q^142) + 4 * q^36 * psi(q^4) * psi(q^284) + 2 * q^9 * psi(q) * psi(q^71) - 2 * q^9 * psi(-q) * psi(-q^71)"),
    ("njf", P, "(2,1,9,q^2) - (4,3,5,q^2) in E products",
     "form(2, 1, 9; q^2) - form(4, 3, 5; q^2)",
     "q^3 * E(-q) * E(-q^71) - q^3 * E(q) * E(q^71) - 2 * q^12 * E(q^4) * E(q^284)"),
    // Discriminants -56 and -224.
    ("rmc1", P, "((1,0,14)-(3,2,5)) / ((2,0,7)+(3,2,5)) as an eta quotient",
     "(form(1, 0, 14) - form(3, 2, 5)) * E(q^14)^2 * E(q^4)^2",
     "q * E(q^28)^2 * E(q^2)^2 * (form(2, 0, 7) + form(3, 2, 5))"),
    ("rmc2", P, "4qE(q^2)E(q^28)U(1,56)U(4,14) = 2(1,0,14) - 2(3,2,5)",
     "4 * q * E(q^2) * E(q^28) * U(1, 56) * U(4, 14)",
     "2 * form(1, 0, 14) - 2 * form(3, 2, 5)"),
    ("rmc2-t5", P, "T5(1,0,14) = 2(3,2,5)",
     "T5(form(1, 0, 14))", "2 * form(3, 2, 5)"),
    ("rmc3", P, "4E(q^4)E(q^14)U(2,28)U(7,8) = 2(2,0,7) + 2(3,2,5)",
     "4 * E(q^4) * E(q^14) * U(2, 28) * U(7, 8)",
     "2 * form(2, 0, 7) + 2 * form(3, 2, 5)"),
    ("rmc3-t5", P, "T5(2,0,7) = 2(3,2,5)",
     "T5(form(2, 0, 7))", "2 * form(3, 2, 5)"),
    ("rmc4", Q, "U(1,14) / U(2,7) as an eta quotient",
     "U(1, 14) * E(q)^2 * E(q^14)^2", "U(2, 7) * E(q^2)^2 * E(q^7)^2"),
    ("rmc5", Q, "U(1,56) / U(7,8) as an eta quotient",
     "U(1, 56) * E(q^2) * E(q^28)", "U(7, 8) * E(q^4) * E(q^14)"),
    ("rcmm1", P, "((1,0,56)-(5,4,12)) / ((7,0,8)+(3,2,19)) as an eta quotient",
     "(form(1, 0, 56) - form(5, 4, 12)) * E(q^8) * E(q^28)",
     "q * E(q^4) * E(q^56) * (form(7, 0, 8) + form(3, 2, 19))"),
    // Quoted U quotients and the resulting form identities.
    ("vc1-a", Q, "U(1,54) / U(2,27) as an eta quotient",
     "U(1, 54) * E(q^54) * E(q^9) * E(q^6) * E(q)",
     "U(2, 27) * E(q^27) * E(q^18) * E(q^3) * E(q^2)"),
    ("vc1-b", Q, "U(1,34) / U(2,17) = kappa(-q^17) / kappa(-q)",
     "U(1, 34) * kappa(-q)", "U(2, 17) * kappa(-q^17)"),
    ("vc1-c", Q, "U(2,13) = U(1,26)",
     "U(2, 13)", "U(1, 26)"),
    ("vc2-a", Q, "U(1,66) / U(2,33) as an eta quotient",
     "U(1, 66) * E(q^22) * E(q^3)", "U(2, 33) * E(q^11) * E(q^6)"),
    ("vc2-b", Q, "U(3,22) / U(6,11) as an eta quotient",
     "U(3, 22) * E(q) * E(q^66)", "U(6, 11) * E(q^2) * E(q^33)"),
    ("five1", P, "discriminant -216 form quotient",
     "(form(2, 0, 27) - form(7, 6, 9)) * E(q^3) * E(q^72) * psi(-q^2) * psi(-q^27)",
     "q^2 * psi(-q) * psi(-q^6) * psi(-q^9) * psi(-q^54) * (form(1, 0, 54) + form(5, 2, 11))"),
    ("five2", P, "discriminant -136 form quotient",
     "(form(2, 0, 17) - form(5, 2, 7)) * phi(-q^68) * psi(q)",
     "q^2 * phi(-q^4) * psi(q^17) * (form(1, 0, 34) + form(5, 2, 7))"),
    ("five3", P, "discriminant -104 form quotient",
     "(form(1, 0, 26) - form(5, 4, 6)) * E(q^4) * E(q^26)",
     "q * E(q^2) * E(q^52) * (form(2, 0, 13) + form(3, 2, 9))"),
    ("five4", P, "discriminant -264 form quotient, first",
     "(form(6, 0, 11) - form(7, 4, 10)) * E(q^6) * E(q^8) * E(q^33) * E(q^44)",
     "q^6 * E(q^12) * E(q^22) * psi(-q) * psi(-q^66) * (form(3, 0, 22) + form(5, 4, 14))"),
    ("five5", P, "discriminant -264 form quotient, second",
     "(form(1, 0, 66) - form(5, 4, 14)) * E(q^88) * E(q^66) * E(q^22) * E(q^12) * E(q^4) * E(q^3)",
     "q * E(q^132) * E(q^44) * E(q^24) * E(q^11) * E(q^6) * E(q^2) * (form(2, 0, 33) + form(7, 4, 10))"),
    // Discriminant -1664.
    ("gzi1", P, "2q^3E(q^16)E(q^104)U(2,13,q^8) = (3,2,139) - (12,4,35)",
     "2 * q^3 * E(q^16) * E(q^104) * U(2, 13; q^8)", "form(3, 2, 139) - form(12, 4, 35)"),
    ("gzi2", P, "2q^7E(q^8)E(q^208)U(1,26,q^8) = (7,4,60) - (15,4,28)",
     "2 * q^7 * E(q^8) * E(q^208) * U(1, 26; q^8)", "form(7, 4, 60) - form(15, 4, 28)"),
    ("gz1", P, "2q^9E(q^8)E(q^208) = (9,8,48) - (17,6,25)",
     "2 * q^9 * E(q^8) * E(q^208)", "form(9, 8, 48) - form(17, 6, 25)"),
    ("gz2", P, "2q^5E(q^16)E(q^104) = (5,4,84) - (20,4,21)",
     "2 * q^5 * E(q^16) * E(q^104)", "form(5, 4, 84) - form(20, 4, 21)"),
    ("gz3", P, "2q^5E(q^8)E(q^208)U(1,26,q^8)^2",
     "2 * q^5 * E(q^8) * E(q^208) * U(1, 26; q^8)^2",
     "form(5, 4, 84) + form(21, 10, 21) - form(13, 0, 32) - form(20, 4, 21)"),
    ("gz3b", P, "second expression for the gz3 combination",
     "form(5, 4, 84) + form(21, 10, 21) - form(13, 0, 32) - form(20, 4, 21)",
     "2 * q^5 * E(q^16) * E(q^104) - 2 * q^13 * psi(q^104) * phi(-q^8)"),
    ("gz4", P, "2qE(q^16)E(q^104)U(2,13,q^8)^2",
     "2 * q * E(q^16) * E(q^104) * U(2, 13; q^8)^2",
     "form(1, 0, 416) + form(17, 6, 25) - form(4, 4, 105) - form(9, 8, 48)"),
    ("gz4b", P, "second expression for the gz4 combination",
     "form(1, 0, 416) + form(17, 6, 25) - form(4, 4, 105) - form(9, 8, 48)",
     "2 * q * psi(q^8) * phi(-q^104) - 2 * q^9 * E(q^8) * E(q^208)"),
    ("gz4b-core", P, "(1,0,416) - (4,4,105) = 2q psi(q^8) phi(-q^104)",
     "form(1, 0, 416) - form(4, 4, 105)", "2 * q * psi(q^8) * phi(-q^104)"),
    ("gz5", P, "first equality of the -1664 quotient chain",
     "(form(5, 4, 84) + form(21, 10, 21) - form(13, 0, 32) - form(20, 4, 21)) * (form(5, 4, 84) - form(20, 4, 21))",
     "(form(9, 8, 48) - form(17, 6, 25)) * (form(1, 0, 416) + form(17, 6, 25) - form(4, 4, 105) - form(9, 8, 48))"),
    ("gz5-b", P, "second equality of the -1664 quotient chain",
     "(form(9, 8, 48) - form(17, 6, 25)) * (form(3, 2, 139) - form(12, 4, 35))",
     "(form(7, 4, 60) - form(15, 4, 28)) * (form(5, 4, 84) - form(20, 4, 21))"),
    ("gz5-c", P, "the -1664 quotient chain as an eta quotient",
     "(form(7, 4, 60) - form(15, 4, 28)) * E(q^16) * E(q^104)",
     "q^4 * E(q^8) * E(q^208) * (form(3, 2, 139) - form(12, 4, 35))"),
    ("4-4-105", P, "(4,4,105) in phi and psi",
     "form(4, 4, 105)", "phi(q^4) * phi(q^416) + 4 * q^105 * psi(q^8) * psi(q^832)"),
    ("4-4-105-R", P, "(4,4,105) as two R functions",
     "R(0, 0, 0, 0, 2, 832, 2, 4, 210)", "R(0, 0, 0, 0, 4, 416, 1, 2, 210)"),
    ("4-4-105-qrr", P, "(4,4,105) as an R function",
     "form(4, 4, 105)", "R(0, 0, 0, 0, 4, 416, 1, 2, 210)"),
    ("u126sq", Q, "U(1,26)^2 in kappa quotients",
     "U(1, 26)^2", "kappa(-q^13) / kappa(-q) - q * kappa(-q) / kappa(-q^13)"),
    // Discriminant -84.
    ("nd1", P, "((1,0,21)-(5,4,5)) / ((3,0,7)+(2,2,11)) as an eta quotient",
     "(form(1, 0, 21) - form(5, 4, 5)) * E(q^6) * E(q^14)",
     "q * E(q^2) * E(q^42) * (form(3, 0, 7) + form(2, 2, 11))"),
    ("nd2", P, "((3,0,7)-(2,2,11)) / ((1,0,21)+(5,4,5)) in E and psi",
     "(form(3, 0, 7) - form(2, 2, 11)) * E(q^2) * E(q^42) * psi(-q^3)^2 * psi(-q^7)^2",
     "-q^2 * E(q^6) * E(q^14) * psi(-q)^2 * psi(-q^21)^2 * (form(1, 0, 21) + form(5, 4, 5))"),
    ("nd3-a", Q, "U(7,12) / U(4,21) as a psi quotient",
     "U(7, 12) * psi(-q^3) * psi(-q^7)", "U(4, 21) * psi(-q) * psi(-q^21)"),
    ("nd3-b", Q, "U(3,28) / U(1,84) as a psi quotient",
     "U(3, 28) * psi(-q^3) * psi(-q^7)", "U(1, 84) * psi(-q) * psi(-q^21)"),
    ("nd4", P, "4E(q^6)E(q^14)U(3,7)U(3,7,q^4) = 2(3,0,7) + 2(2,2,11)",
     "4 * E(q^6) * E(q^14) * U(3, 7) * U(3, 7; q^4)",
     "2 * form(3, 0, 7) + 2 * form(2, 2, 11)"),
    ("nd5", P, "4q^3E(q^6)E(q^14)U(12,7)U(3,28) = 2(3,0,7) - 2(2,2,11)",
     "4 * q^3 * E(q^6) * E(q^14) * U(12, 7) * U(3, 28)",
     "2 * form(3, 0, 7) - 2 * form(2, 2, 11)"),
    ("nd5-b", P, "-4q^2E(q^6)E(q^14)U(7,12)U(3,28) = 2(3,0,7) - 2(2,2,11)",
     "-4 * q^2 * E(q^6) * E(q^14) * U(7, 12) * U(3, 28)",
     "2 * form(3, 0, 7) - 2 * form(2, 2, 11)"),
    ("nd6", P, "4qE(q^2)E(q^42)U(1,21)U(1,21,q^4) = 2(1,0,21) - 2(5,4,5)",
     "4 * q * E(q^2) * E(q^42) * U(1, 21) * U(1, 21; q^4)",
     "2 * form(1, 0, 21) - 2 * form(5, 4, 5)"),
    ("nd7", P, "4E(q^2)E(q^42)U(4,21)U(1,84) = 2(1,0,21) + 2(5,4,5)",
     "4 * E(q^2) * E(q^42) * U(4, 21) * U(1, 84)",
     "2 * form(1, 0, 21) + 2 * form(5, 4, 5)"),
    ("nd-t5-3-0-7", P, "T5(3,0,7) = 2(2,2,11)",
     "T5(form(3, 0, 7))", "2 * form(2, 2, 11)"),
    ("nd-t5-1-0-21", P, "T5(1,0,21) = 2(5,4,5)",
     "T5(form(1, 0, 21))", "2 * form(5, 4, 5)"),
    ("u37", Q, "U(3,7) = U(1,21)",
     "U(3, 7)", "U(1, 21)"),
    // Discriminant -76.
    ("abt1", P, "4U(1,19)U(1,19,q^4) in kappa products",
     "4 * U(1, 19) * U(1, 19; q^4)",
     "3 * kappa(q)^2 * kappa(q^19)^2 + kappa(-q)^2 * kappa(-q^19)^2 + 4 * q^5 / (kappa(-q^2)^2 * kappa(-q^38)^2)"),
    ("abt2", P, "4qU(1,19)U(1,19,-q) in kappa products",
     "4 * q * U(1, 19) * U(1, 19; -q)",
     "kappa(q)^2 * kappa(q^19)^2 - kappa(-q)^2 * kappa(-q^19)^2 + 12 * q^5 / (kappa(-q^2)^2 * kappa(-q^38)^2)"),
    ("abt3", P, "4E(q^2)E(q^38)U(1,19)U(1,19,q^4) = 2(1,0,19) + 2(4,2,5)",
     "4 * E(q^2) * E(q^38) * U(1, 19) * U(1, 19; q^4)",
     "2 * form(1, 0, 19) + 2 * form(4, 2, 5)"),
    ("abt4", P, "4qE(q^2)E(q^38)U(4,19)U(1,76) = 2(1,0,19) - 2(4,2,5)",
     "4 * q * E(q^2) * E(q^38) * U(4, 19) * U(1, 76)",
     "2 * form(1, 0, 19) - 2 * form(4, 2, 5)"),
    ("abt-t5", P, "T5(1,0,19) = 2(4,2,5)",
     "T5(form(1, 0, 19))", "2 * form(4, 2, 5)"),
    ("abt5", Q, "U(4,19)U(1,76) = U(1,19,q^2)",
     "U(4, 19) * U(1, 76)", "U(1, 19; q^2)"),
    ("abt5a", Q, "4qU(1,19,q^2) E(q^2)E(q^38) in phi and psi",
     "4 * q * U(1, 19; q^2) * E(q^2) * E(q^38)",
     "phi(q) * phi(q^19) - phi(-q) * phi(-q^19) - 4 * q^5 * psi(q^2) * psi(q^38)"),
    ("abt6", Q, "4qU(1,19,q^2) in kappa products",
     "4 * q * U(1, 19; q^2)",
     "kappa(q)^2 * kappa(q^19)^2 - kappa(-q)^2 * kappa(-q^19)^2 - 4 * q^5 / (kappa(-q^2)^2 * kappa(-q^38)^2)"),
    ("abt8", P, "2(4,2,5) in phi and psi",
     "2 * form(4, 2, 5)",
     "phi(q) * phi(q^19) + phi(-q) * phi(-q^19) + 4 * q^5 * psi(q^2) * psi(q^38)"),
    // Identities offered without proof.
    ("cnj1", S, "discriminant -111 quotient chain, first equality",
     "(form(4, 1, 7) - form(5, 3, 6)) * (form(2, 1, 14) + form(4, 1, 7))",
     "(form(3, 3, 10) - form(4, 1, 7)) * (form(1, 1, 28) - form(4, 1, 7))"),
    ("cnj1-eta", S, "discriminant -111 quotient chain as an eta quotient",
     "(form(3, 3, 10) - form(4, 1, 7)) * E(q^3) * E(q^37)",
     "q^3 * E(q) * E(q^111) * (form(2, 1, 14) + form(4, 1, 7))"),
    ("cnj2", S, "discriminant -119 quotient as an eta quotient",
     "(form(4, 3, 8) - form(6, 5, 6)) * E(q^7) * E(q^17)",
     "q^4 * E(q) * E(q^119) * (form(1, 1, 30) + form(5, 1, 6))"),
    ("cnj3", S, "discriminant -119 quadratic relation",
     "(form(4, 3, 8) - form(2, 1, 15)) * (form(3, 1, 10) - form(5, 1, 6))",
     "(form(1, 1, 30) + form(5, 1, 6)) * (form(6, 5, 6) - form(5, 1, 6))"),
    ("cnj4", S, "discriminant -80 quotient as an eta quotient",
     "(form(1, 0, 20) - form(3, 2, 7)) * E(q^10) * E(q^8)",
     "q * E(q^40) * E(q^2) * (form(3, 2, 7) + form(4, 0, 5))"),
];
