"""Configuration management module"""
