from django.apps import AppConfig


class GradedConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'graded'
    verbose_name = 'Z₂ 分次上同调环'
