# Peeling vs optimal decoding on one concrete erasure pattern.
#
# The erasure set {1,2,3,7,8} contains the codeword support {1,2,7,8},
# so no decoder can pin down the transmitted word.  The matrices still
# differ in how much they recover before getting stuck.

from stopset import (
    ReceivedWord,
    catalog,
    classify_erasure_set,
    iterative_decode,
    mask_from_indices,
    optimal_decode,
    peel_closure,
    rm_8_4_4,
)

rm = rm_8_4_4()
h8, h14 = catalog("H_8"), catalog("H_14")

codeword = mask_from_indices({1, 2, 7, 8})
assert rm.contains(codeword)
received = ReceivedWord.from_codeword(codeword, 8, erasures={1, 2, 3, 7, 8})
print("transmitted: 11000011")
print("received:   ", received)
print()

# %% The erasure set is incorrigible, hence a dead-end set for every matrix.
labels = classify_erasure_set(rm, h8, received.erasures)
print("classification under H_8:", labels)

# %% With H_8 the peeler cannot move: every check touches 0 or 2+ erasures.
out8 = iterative_decode(h8, received)
print(f"H_8:  {out8.kind}, recovered {out8.recovered} bits, residual {out8.residual_set}")

# %% H_14 contains the check c3+c4+c5+c6 = 0, which touches only one
# erased position (3), so bit 3 comes back before the peeler stalls on
# the codeword support.
out14 = iterative_decode(h14, received)
print(f"H_14: {out14.kind}, recovered {out14.recovered} bits, residual {out14.residual_set}")
print("partial word under H_14:", out14.word)
assert out14.residual == peel_closure(h14, received.erasures)

# %% The optimal decoder reports the ambiguity outright.
opt = optimal_decode(rm, received)
print("optimal decoder:", opt.kind)
print()

# %% Any 3 erasures (< d = 4) always decode, and both decoders agree
# with the transmitted word.
three = ReceivedWord.from_codeword(codeword, 8, erasures={2, 5, 6})
print("erase {2,5,6}: optimal ->", str(optimal_decode(rm, three).word),
      "| peeling over H_14 ->", str(iterative_decode(h14, three).word))
