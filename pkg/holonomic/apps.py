from django.apps import AppConfig


class HolonomicConfig(AppConfig):
    name = 'holonomic'
    verbose_name = 'Holonomic recurrence'
