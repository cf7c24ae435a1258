from django.apps import AppConfig


class HodgeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hodge'
    verbose_name = '离散 Hodge 代数与 Walker 重构'
