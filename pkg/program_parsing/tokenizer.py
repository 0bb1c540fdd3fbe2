from dataclasses import dataclass

from classes.errors import PLPSyntaxError

# Longest operators first so that `=:=` wins over `=`
OPERATORS = (":-", "=:=", "=\\=", "\\=", "=<", ">=", "=", "<", ">", "/", "-", "|")
PUNCTUATION = "()[],;"
SYMBOL_CHARS = set("+-*/\\^<>=~:.?@#&$|")


@dataclass(frozen=True)
class Token:
    kind: str  # atom, qatom, var, int, float, punct, op, end, eof
    text: str
    line: int
    column: int


def tokenize(text):
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    length = len(text)

    while pos < length:
        ch = text[pos]
        column = pos - line_start + 1

        if ch == "\n":
            pos += 1
            line += 1
            line_start = pos
            continue
        if ch.isspace():
            pos += 1
            continue
        if ch == "%":
            while pos < length and text[pos] != "\n":
                pos += 1
            continue
        if ch == "/" and text.startswith("/*", pos):
            end = text.find("*/", pos + 2)
            if end < 0:
                raise PLPSyntaxError("unterminated block comment", line, column)
            for skipped in text[pos:end]:
                if skipped == "\n":
                    line += 1
            pos = end + 2
            last_newline = text.rfind("\n", 0, pos)
            if last_newline >= 0:
                line_start = last_newline + 1
            continue

        if ch.isdigit():
            start = pos
            while pos < length and text[pos].isdigit():
                pos += 1
            kind = "int"
            if pos + 1 < length and text[pos] == "." and text[pos + 1].isdigit():
                pos += 1
                while pos < length and text[pos].isdigit():
                    pos += 1
                kind = "float"
            if pos < length and text[pos] in "eE" and kind == "float":
                exp = pos + 1
                if exp < length and text[exp] in "+-":
                    exp += 1
                if exp < length and text[exp].isdigit():
                    pos = exp
                    while pos < length and text[pos].isdigit():
                        pos += 1
            tokens.append(Token(kind, text[start:pos], line, column))
            continue

        if ch.isalpha() or ch == "_":
            start = pos
            while pos < length and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            word = text[start:pos]
            kind = "var" if (word[0].isupper() or word[0] == "_") else "atom"
            tokens.append(Token(kind, word, line, column))
            continue

        if ch == "'":
            pos += 1
            chars = []
            while True:
                if pos >= length or text[pos] == "\n":
                    raise PLPSyntaxError("unterminated quoted atom", line, column)
                if text[pos] == "\\" and pos + 1 < length:
                    chars.append(text[pos + 1])
                    pos += 2
                    continue
                if text[pos] == "'":
                    if text.startswith("''", pos):
                        chars.append("'")
                        pos += 2
                        continue
                    pos += 1
                    break
                chars.append(text[pos])
                pos += 1
            tokens.append(Token("qatom", "".join(chars), line, column))
            continue

        if ch in PUNCTUATION:
            tokens.append(Token("punct", ch, line, column))
            pos += 1
            continue

        if ch == "." and (pos + 1 >= length or text[pos + 1].isspace() or text[pos + 1] == "%"):
            tokens.append(Token("end", ".", line, column))
            pos += 1
            continue

        if ch in SYMBOL_CHARS:
            for op in OPERATORS:
                if text.startswith(op, pos):
                    tokens.append(Token("op", op, line, column))
                    pos += len(op)
                    break
            else:
                raise PLPSyntaxError(f"unexpected character {ch!r}", line, column)
            continue

        raise PLPSyntaxError(f"unexpected character {ch!r}", line, column)

    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens
