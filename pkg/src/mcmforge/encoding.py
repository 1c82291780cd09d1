"""Pack module terms (component, monomial) into single integers.

Comparing two packed terms as integers agrees with the module order:
total degree (monomial degree plus component twist), then block, then the
monomial order, then component (lower index wins).  Multiplying a term by a
monomial is integer addition, and divisibility is a borrow test on guarded
bit fields.
"""

EXP_BITS = 16
EXP_MAX = (1 << EXP_BITS) - 1
FIELD = EXP_BITS + 1          # one guard bit on top of every exponent field
LIN_BITS = 40
COMP_BITS = 20
COMP_MAX = (1 << COMP_BITS) - 1
BLOCK_BITS = 8


class TermEncoder:
    def __init__(self, weights, order, twists=(0,), blocks=None, degree_top=True):
        self.weights = tuple(weights)
        self.n = len(self.weights)
        self.order = order
        self.twists = tuple(twists)
        self.blocks = tuple(blocks) if blocks is not None else (0,) * len(self.twists)
        if len(self.twists) > COMP_MAX:
            raise ValueError("too many components")
        self.degree_top = degree_top
        parts = order.layout(self.n)
        shift = COMP_BITS
        self.lin = []     # (shift, vars)
        self.rev = []     # (shift, var)
        self.lex = []
        rev_mask = lex_mask = rev_guard = lex_guard = 0
        field_mask = (1 << FIELD) - 1
        for kind, vs in reversed(parts):
            if kind == "lin":
                self.lin.append((shift, vs))
                shift += LIN_BITS
            elif kind == "rev":
                for v in vs:        # vs[0] is the least significant
                    self.rev.append((shift, v))
                    rev_mask |= field_mask << shift
                    rev_guard |= 1 << (shift + EXP_BITS)
                    shift += FIELD
            else:
                for v in reversed(vs):
                    self.lex.append((shift, v))
                    lex_mask |= field_mask << shift
                    lex_guard |= 1 << (shift + EXP_BITS)
                    shift += FIELD
        self.block_shift = shift
        self.top_shift = shift + BLOCK_BITS
        self.rev_mask, self.rev_guard = rev_mask, rev_guard
        self.lex_mask, self.lex_guard = lex_mask, lex_guard
        self.comp_mask = COMP_MAX
        self.rev_base = sum(EXP_MAX << s for s, _ in self.rev)

    def degree(self, exps):
        return sum(e * w for e, w in zip(exps, self.weights))

    def mono_code(self, exps):
        """Additive code of a monomial: encode(c, m*u) == encode(c, u) + mono_code(m)."""
        code = 0
        if self.degree_top:
            code += self.degree(exps) << self.top_shift
        for s, vs in self.lin:
            code += sum(exps[v] * self.weights[v] for v in vs) << s
        for s, v in self.rev:
            code -= exps[v] << s
        for s, v in self.lex:
            code += exps[v] << s
        return code

    def encode(self, comp, exps):
        if max(exps, default=0) > EXP_MAX:
            raise OverflowError("exponent too large for packed terms")
        code = self.rev_base + self.mono_code(exps) + (COMP_MAX - comp)
        code += self.blocks[comp] << self.block_shift
        if self.degree_top:
            code += self.twists[comp] << self.top_shift
        return code

    def comp(self, code):
        return COMP_MAX - (code & COMP_MAX)

    def tdeg(self, code):
        return code >> self.top_shift

    def total_degree(self, code):
        """Monomial degree plus component twist, whether or not it is packed on top."""
        if self.degree_top:
            return code >> self.top_shift
        return self.degree(self.exps(code)) + self.twists[self.comp(code)]

    def exps(self, code):
        e = [0] * self.n
        for s, v in self.rev:
            e[v] = EXP_MAX - ((code >> s) & EXP_MAX)
        for s, v in self.lex:
            e[v] = (code >> s) & EXP_MAX
        return tuple(e)

    def decode(self, code):
        return self.comp(code), self.exps(code)

    def div_key(self, code):
        return (code & COMP_MAX, code & self.rev_mask, code & self.lex_mask)

    def divides(self, kg, kt):
        """Does the term with div_key kg divide the term with div_key kt?"""
        return (kg[0] == kt[0] and not ((kg[1] - kt[1]) & self.rev_guard)
                and not ((kt[2] - kg[2]) & self.lex_guard))
