"""
多边形空间计算的异常体系

所有业务异常都继承 Django 的 ValidationError，附带机器可读的 code
以及命令行退出码（1 用法错误由 CommandError 负责，2 资源中止，3 前置条件不满足）。
"""
from django.core.exceptions import ValidationError


class PolySpaceError(ValidationError):
    """业务异常基类"""
    default_code = 'polyspace_error'
    exit_code = 3

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or self.default_code, params=params)

    def as_dict(self):
        return {
            'code': self.code,
            'message': self.message,
            'exit_code': self.exit_code,
        }


class LengthVectorError(PolySpaceError):
    """长度向量无法解析、含非正分量或维数越界"""
    default_code = 'invalid_length_vector'


class PreconditionError(PolySpaceError):
    """操作的前提假设不成立（例如非一般位置的向量）"""
    default_code = 'precondition_violated'


class MalformedInputError(PolySpaceError):
    """输入数据自相矛盾，例如理想与补集规则不一致"""
    default_code = 'malformed_input'


class ResourceAbort(PolySpaceError):
    """达到时间或资源上限，枚举中止，可断点续跑"""
    default_code = 'resource_abort'
    exit_code = 2


class InvariantViolation(PolySpaceError):
    """内部交叉校验失败"""
    default_code = 'invariant_violation'
    exit_code = 4
