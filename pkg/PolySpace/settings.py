"""
Django settings for PolySpace project.

Generated by 'django-admin startproject' using Django 5.2.7.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-polyspace-local-only')

DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

# 纯命令行工具，不对外提供 HTTP 服务
ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'core',
    'chambers',
    'cohomology',
    'hodge',
    'graded',
]


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

# 仅保存枚举任务的断点信息，使用 SQLite 即可
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('DB_PATH', str(BASE_DIR / 'polyspace.sqlite3')),
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'zh-hans'

TIME_ZONE = 'Asia/Shanghai'

USE_I18N = True

USE_TZ = True


# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': True,
}


# 多边形空间计算配置
# 枚举结果数据库目录（chambers-<n>.jsonl）
CHAMBER_DB_DIR = Path(os.getenv('CHAMBER_DB_DIR', str(BASE_DIR / 'data')))
# 子集位图的最大维数 n
POLYSPACE_MAX_N = int(os.getenv('POLYSPACE_MAX_N', '20'))
# 房室枚举默认上限，超过需显式 --allow-large
POLYSPACE_ENUM_MAX_N = int(os.getenv('POLYSPACE_ENUM_MAX_N', '9'))
# 搜索树拆分深度（并行任务粒度）
POLYSPACE_SPLIT_DEPTH = int(os.getenv('POLYSPACE_SPLIT_DEPTH', '6'))
# 默认工作进程数
POLYSPACE_WORKERS = int(os.getenv('POLYSPACE_WORKERS', '1'))
# 是否默认以 gzip 写出数据库
POLYSPACE_GZIP = os.getenv('POLYSPACE_GZIP', 'False').lower() == 'true'


# 日志配置：标准输出保留给 JSON 结果，日志写到 stderr
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
    },
}
