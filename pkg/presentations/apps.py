from django.apps import AppConfig


class PresentationsConfig(AppConfig):
    name = 'presentations'
    verbose_name = 'Polygraphs and Tietze transformations'
