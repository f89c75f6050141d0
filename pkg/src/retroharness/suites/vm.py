"""Compiler/decompiler suite (backward mode).

Source expressions are compiled to a stack-machine bytecode by a trusted
compiler; the decompiler under test must reconstruct source whose observed
behavior matches.  The oracle is behavioral: both sources are evaluated
under several sampled variable environments, and agreement means equal
integers or an identical error kind (two divisions by zero agree).

The seeded bug ("swap_sub") reverses the operand order of SUB and DIV
nodes while rebuilding the tree, a classic operand-order decompiler
defect that is invisible on purely commutative programs.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Mode, SuiteDefinition, TrialContext, Variant
from ..expr import (
    BinOp,
    Const,
    EvalError,
    ExprNode,
    ExprSyntaxError,
    Var,
    eval_ast,
    parse_infix,
    print_infix,
    trunc_div,
    variables,
)
from ..generators import gen_env, gen_expr_ast

__all__ = [
    "Instr",
    "compile_expr",
    "decompile",
    "run_vm",
    "bytecode_to_text",
    "bytecode_from_text",
    "vm_suite",
    "ENVS_PER_TRIAL",
]

_BINARY_OPS = {"ADD": "+", "SUB": "-", "MUL": "*", "DIV": "/"}
_OP_MNEMONIC = {"+": "ADD", "-": "SUB", "*": "MUL", "/": "DIV"}

ENVS_PER_TRIAL = 8


@dataclass(frozen=True)
class Instr:
    """One stack-machine instruction: PUSH k, LOAD v, ADD, SUB, MUL, DIV."""

    op: str
    arg: int | str | None = None


def compile_expr(node: ExprNode) -> list[Instr]:
    """Post-order code emission: left, right, operator."""
    if isinstance(node, Const):
        return [Instr("PUSH", node.value)]
    if isinstance(node, Var):
        return [Instr("LOAD", node.name)]
    return (
        compile_expr(node.left)
        + compile_expr(node.right)
        + [Instr(_OP_MNEMONIC[node.op])]
    )


def run_vm(code: list[Instr], env: dict[str, int]) -> int:
    """Execute bytecode against an operand stack.

    Raises EvalError with kind div_by_zero, unbound_variable or
    stack_underflow; an underflow indicates malformed code, not a wrong
    answer.
    """
    stack: list[int] = []
    for instr in code:
        if instr.op == "PUSH":
            stack.append(int(instr.arg))
        elif instr.op == "LOAD":
            try:
                stack.append(env[instr.arg])
            except KeyError:
                raise EvalError(
                    "unbound_variable", f"unbound variable {instr.arg!r}"
                ) from None
        elif instr.op in _BINARY_OPS:
            if len(stack) < 2:
                raise EvalError("stack_underflow", f"stack underflow at {instr.op}")
            right = stack.pop()
            left = stack.pop()
            if instr.op == "ADD":
                stack.append(left + right)
            elif instr.op == "SUB":
                stack.append(left - right)
            elif instr.op == "MUL":
                stack.append(left * right)
            else:
                stack.append(trunc_div(left, right))
        else:
            raise ValueError(f"unknown instruction {instr.op!r}")
    if len(stack) != 1:
        raise EvalError("stack_underflow", f"final stack height {len(stack)}")
    return stack[0]


def decompile(code: list[Instr], variant: str = "correct") -> str:
    """Rebuild source text by symbolic stack execution.

    The "swap_sub" variant reverses the operands of SUB and DIV nodes.
    """
    if variant not in ("correct", "swap_sub"):
        raise ValueError(f"unknown variant {variant!r}")
    stack: list[ExprNode] = []
    for instr in code:
        if instr.op == "PUSH":
            stack.append(Const(int(instr.arg)))
        elif instr.op == "LOAD":
            stack.append(Var(str(instr.arg)))
        elif instr.op in _BINARY_OPS:
            if len(stack) < 2:
                raise EvalError("stack_underflow", f"stack underflow at {instr.op}")
            right = stack.pop()
            left = stack.pop()
            if variant == "swap_sub" and instr.op in ("SUB", "DIV"):
                left, right = right, left
            stack.append(BinOp(_BINARY_OPS[instr.op], left, right))
        else:
            raise ValueError(f"unknown instruction {instr.op!r}")
    if len(stack) != 1:
        raise EvalError("stack_underflow", f"final stack height {len(stack)}")
    return print_infix(stack[0])


def bytecode_to_text(code: list[Instr]) -> str:
    """One instruction per line; integer operands in decimal."""
    lines = []
    for instr in code:
        if instr.arg is None:
            lines.append(instr.op)
        else:
            lines.append(f"{instr.op} {instr.arg}")
    return "\n".join(lines) + "\n"


def bytecode_from_text(text: str) -> list[Instr]:
    code: list[Instr] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "PUSH" and len(parts) == 2:
            code.append(Instr("PUSH", int(parts[1])))
        elif parts[0] == "LOAD" and len(parts) == 2:
            code.append(Instr("LOAD", parts[1]))
        elif parts[0] in _BINARY_OPS and len(parts) == 1:
            code.append(Instr(parts[0]))
        else:
            raise ValueError(f"bad bytecode line {lineno}: {raw!r}")
    return code


def _observe(node: ExprNode, env: dict[str, int]) -> tuple[str, object]:
    try:
        return ("value", eval_ast(node, env))
    except EvalError as exc:
        return ("error", exc.kind)


def vm_suite() -> SuiteDefinition:
    """Backward-mode suite: compile (trusted) then decompile (under test).

    The relation samples eight environments per trial and compares the
    observed behavior of the original and decompiled sources.  Decompiler
    output that fails to parse counts as a violation, since unparsable
    source is observable misbehavior.
    """

    def generate(ctx: TrialContext) -> str:
        return print_infix(gen_expr_ast(ctx.rng, max_depth=4))

    def forward(src: str, ctx: TrialContext) -> list[Instr]:
        return compile_expr(parse_infix(src))

    def backward_correct(code: list[Instr], ctx: TrialContext) -> str:
        return decompile(code, "correct")

    def backward_buggy(code: list[Instr], ctx: TrialContext) -> str:
        return decompile(code, "swap_sub")

    def relation(src, src_prime, mutation, ctx) -> bool:
        original = parse_infix(src)
        try:
            returned = parse_infix(src_prime)
        except ExprSyntaxError:
            return False
        names = sorted(variables(original) | variables(returned))
        for _ in range(ENVS_PER_TRIAL):
            env = gen_env(ctx.rng, names)
            if _observe(original, env) != _observe(returned, env):
                return False
        return True

    return SuiteDefinition(
        name="vm",
        mode=Mode.BACKWARD,
        generator=generate,
        forward=forward,
        backward=backward_correct,
        relation=relation,
        variants={
            "correct": Variant(),
            "swap_sub": Variant(backward=backward_buggy),
        },
    )
