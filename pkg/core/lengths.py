"""
长度向量 ℓ = (l_1, …, l_n)

分量一律使用 fractions.Fraction 精确存储，所有比较都不经过浮点数。
"""
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple

from .exceptions import LengthVectorError

MIN_N = 3
DEFAULT_MAX_N = 20


def parse_rational(token) -> Fraction:
    """解析单个有理数：支持 int、Fraction 以及 "p/q" / "1.5" 形式的字符串"""
    if isinstance(token, bool):
        raise LengthVectorError(f'无法解析的分量: {token!r}')
    if isinstance(token, (int, Fraction)):
        return Fraction(token)
    if isinstance(token, str):
        text = token.strip()
        if not text:
            raise LengthVectorError('分量不能为空')
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise LengthVectorError(f'无法解析的分量: {text!r}') from exc
    raise LengthVectorError(f'不支持的分量类型: {type(token).__name__}')


def format_rational(value: Fraction) -> str:
    """有理数统一输出为 "p/q"（整数输出为 "p"）"""
    return str(Fraction(value))


@dataclass(frozen=True)
class LengthVector:
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        for i, value in enumerate(self.entries, start=1):
            if value <= 0:
                raise LengthVectorError(f'第 {i} 个分量必须为正数，实际为 {value}')

    @classmethod
    def of(cls, values: Iterable, max_n: int = DEFAULT_MAX_N) -> 'LengthVector':
        entries = tuple(parse_rational(v) for v in values)
        if not MIN_N <= len(entries) <= max_n:
            raise LengthVectorError(f'向量维数 n={len(entries)} 超出范围 [{MIN_N}, {max_n}]')
        return cls(entries)

    @classmethod
    def parse(cls, text: str, max_n: int = DEFAULT_MAX_N) -> 'LengthVector':
        """解析 "a/b,c/d,…" 或 JSON 数组 '["1/2", "3"]'"""
        text = (text or '').strip()
        if text.startswith('['):
            try:
                values = json.loads(text)
            except json.JSONDecodeError as exc:
                raise LengthVectorError(f'JSON 数组格式错误: {exc.msg}') from exc
            if not isinstance(values, list):
                raise LengthVectorError('长度向量必须是 JSON 数组')
        else:
            values = [t for t in text.split(',')]
        return cls.of(values, max_n=max_n)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def is_ordered(self) -> bool:
        return all(a <= b for a, b in zip(self.entries, self.entries[1:]))

    def sorted_with_permutation(self) -> Tuple['LengthVector', Tuple[int, ...]]:
        """
        返回升序排列后的向量及排序置换
        置换 perm 满足：排序后第 k 个分量来自原向量的第 perm[k-1] 个分量（均为 1 起始）
        稳定排序保证相等分量保持原有相对次序
        """
        order = sorted(range(self.n), key=lambda i: self.entries[i])
        perm = tuple(i + 1 for i in order)
        return LengthVector(tuple(self.entries[i] for i in order)), perm

    def scaled(self, factor) -> 'LengthVector':
        factor = Fraction(factor)
        if factor <= 0:
            raise LengthVectorError('缩放因子必须为正数')
        return LengthVector(tuple(v * factor for v in self.entries))

    def normalized(self) -> 'LengthVector':
        """缩放到单纯形 Σ l_i = 1 上"""
        return self.scaled(1 / self.total)

    def integer_weights(self) -> List[int]:
        """同乘分母的最小公倍数后约去公因子，得到与原向量同比例的最小正整数向量"""
        common = lcm(*(v.denominator for v in self.entries))
        ints = [int(v * common) for v in self.entries]
        divisor = 0
        for value in ints:
            divisor = gcd(divisor, value)
        return [value // divisor for value in ints]

    def as_strings(self) -> List[str]:
        return [format_rational(v) for v in self.entries]

    def __str__(self):
        return '(' + ', '.join(self.as_strings()) + ')'


def permute_bitset(mask: int, image: Sequence[int]) -> int:
    """按 1 起始的像数组 image 变换位图：第 i 位移到第 image[i-1] 位"""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << (image[i] - 1)
        mask >>= 1
        i += 1
    return out
