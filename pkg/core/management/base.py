"""
管理命令公共基类

统一处理：输入校验、JSON 输出、错误对象与退出码
（1 参数错误，2 资源中止，3 前置条件不满足）
"""
import logging
import sys

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from core.exceptions import LengthVectorError, PolySpaceError
from core.serializers import SCHEMA_VERSION, ErrorSerializer, VectorInputSerializer, first_error

logger = logging.getLogger(__name__)

USAGE_EXIT_CODE = 1


class PolySpaceCommand(BaseCommand):
    """所有计算命令的基类，子类实现 compute() 与 render_text()"""

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # 参数错误统一抛 CommandError，由 run_from_argv 转成退出码 1
        parser.called_from_command_line = False
        parser.add_argument('--json', action='store_true', help='以 JSON 格式输出结果')
        return parser

    def run_from_argv(self, argv):
        try:
            super().run_from_argv(argv)
        except CommandError as exc:
            # 只有参数解析阶段的错误会到达这里，执行阶段的错误已由父类处理
            self.write_json({
                'schema_version': SCHEMA_VERSION,
                'error': {'code': 'usage', 'message': str(exc), 'exit_code': USAGE_EXIT_CODE},
            })
            self.stderr.write(str(exc))
            sys.exit(USAGE_EXIT_CODE)

    def handle(self, *args, **options):
        try:
            result = self.compute(**options)
        except PolySpaceError as exc:
            logger.warning(f'{self.__module__.rsplit(".", 1)[-1]} 执行失败: {exc.message}')
            self.write_json({
                'schema_version': SCHEMA_VERSION,
                'error': ErrorSerializer(exc.as_dict()).data,
            })
            raise CommandError(exc.message, returncode=exc.exit_code) from exc
        if options.get('json'):
            self.write_json({'schema_version': SCHEMA_VERSION, **result})
        else:
            self.render_text(result, **options)

    def compute(self, **options):
        raise NotImplementedError('子类必须实现 compute()')

    def render_text(self, result, **options):
        for key, value in result.items():
            self.stdout.write(f'{key}: {value}')

    def write_json(self, payload):
        self.stdout.write(JSONRenderer().render(payload).decode('utf-8'))

    def load_vectors(self, lv, lv2=None):
        """经核心组合模块校验长度向量，失败时抛 LengthVectorError（退出码 3）"""
        data = {'lv': lv}
        if lv2 is not None:
            data['lv2'] = lv2
        serializer = VectorInputSerializer(data=data)
        if not serializer.is_valid():
            raise LengthVectorError(first_error(serializer.errors))
        return serializer.validated_data['lv'], serializer.validated_data.get('lv2')
